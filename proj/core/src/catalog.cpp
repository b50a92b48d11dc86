#include <mukai/catalog.hpp>

#include <utility>

namespace mukai {

namespace {

SpacePtr corrupt(const SpacePtr& space) {
  const auto hits = indices_of_bidegree(space->ring, Bidegree{1, 1});
  HodgeClass bad = space->todd + space->ring->basis_class(hits.front());
  return with_todd(space, std::move(bad));
}

}  // namespace

std::vector<std::pair<std::string, SpacePtr>> Corpus::named() const {
  return {{"P^1", p1},     {"P^2", p2},   {"P^3", p3},  {"C_g0", g0},
          {"E", g1},       {"C_g2", g2},  {"C_g3", g3}, {"P^1xP^1", p1xp1},
          {"ExE", exe},    {"P^1xE", p1xe}};
}

Corpus make_corpus(bool corrupt_todd) {
  Corpus c;
  c.p1 = projective_space(1);
  c.p2 = projective_space(2);
  c.p3 = projective_space(3);
  c.g0 = curve(0);
  c.g1 = curve(1);
  c.g2 = curve(2);
  c.g3 = curve(3);
  if (corrupt_todd) {
    c.p1 = corrupt(c.p1);
    c.p2 = corrupt(c.p2);
    c.p3 = corrupt(c.p3);
    c.g0 = corrupt(c.g0);
    c.g1 = corrupt(c.g1);
    c.g2 = corrupt(c.g2);
    c.g3 = corrupt(c.g3);
  }
  c.p1xp1 = product(c.p1, c.p1);
  c.exe = product(c.g1, c.g1);
  c.p1xe = product(c.p1, c.g1);
  return c;
}

uint64_t mix_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h ^ seed;
}

Rational random_rational(std::mt19937_64& rng) {
  const int num = static_cast<int>(rng() % 19) - 9;
  const int den = 1 + static_cast<int>(rng() % 3);
  return Rational(num, den);
}

HodgeClass random_class(const AlgebraPtr& ring, std::mt19937_64& rng) {
  std::vector<Rational> coeffs(ring->dim());
  for (auto& c : coeffs) c = random_rational(rng);
  return ring->make_class(std::move(coeffs));
}

HodgeClass random_hh_zero_class(const AlgebraPtr& ring, std::mt19937_64& rng) {
  std::vector<Rational> coeffs(ring->dim(), Rational(0));
  for (int i = 0; i < ring->dim(); ++i) {
    if (hh_degree(ring->element(i).degree) == 0) coeffs[i] = random_rational(rng);
  }
  return ring->make_class(std::move(coeffs));
}

Kernel line_bundle_kernel(const SpacePtr& x, const SpacePtr& y, int a, int b) {
  HodgeClass left = exp_class(Rational(a) * hyperplane_class(x));
  HodgeClass right = exp_class(Rational(b) * hyperplane_class(y));
  return rank_one_kernel(x, y, left, right,
                         "O(" + std::to_string(a) + ") \xE2\x8A\xA0 O(" + std::to_string(b) + ")");
}

Kernel random_kernel(const SpacePtr& x, const SpacePtr& y, uint64_t seed, int index) {
  SpacePtr domain = product(x, y);
  std::mt19937_64 rng(mix_seed(seed, x->label + "->" + y->label + "#" + std::to_string(index)));
  HodgeClass ch = random_hh_zero_class(domain->ring, rng);
  return make_kernel(x, y, domain, std::move(ch), "random#" + std::to_string(index));
}

std::vector<Kernel> kernel_catalog(const SpacePtr& x, const SpacePtr& y, uint64_t seed) {
  std::vector<Kernel> out;
  if (x == y) out.push_back(identity_kernel(x));

  for (int i = 0; i < x->ring->dim(); ++i) {
    const int deg_left = hh_degree(x->ring->element(i).degree);
    for (int j = 0; j < y->ring->dim(); ++j) {
      if (deg_left + hh_degree(y->ring->element(j).degree) != 0) continue;
      out.push_back(rank_one_kernel(x, y, x->ring->basis_class(i), y->ring->basis_class(j),
                                    x->ring->element(i).name + " \xE2\x8A\x97 " +
                                        y->ring->element(j).name));
    }
  }

  const bool polarized = indices_of_bidegree(x->ring, Bidegree{1, 1}).size() == 1 &&
                         indices_of_bidegree(y->ring, Bidegree{1, 1}).size() == 1;
  if (polarized) {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) out.push_back(line_bundle_kernel(x, y, a, b));
    }
  }

  for (int k = 0; k < 5; ++k) out.push_back(random_kernel(x, y, seed, k));
  return out;
}

}  // namespace mukai
