#include <mukai/hochschild.hpp>

#include <utility>

namespace mukai {

HHClass make_hh(SpacePtr space, HodgeClass value) {
  if (value.owner() != space->ring) throw SpaceMismatch("class does not live on the space's ring");
  return HHClass{std::move(space), std::move(value)};
}

HHClass basis_hh(const SpacePtr& space, int i) { return HHClass{space, space->ring->basis_class(i)}; }

std::map<int, HodgeClass> hh_degree_split(const HHClass& x) {
  std::map<int, HodgeClass> parts;
  const auto& ring = *x.space->ring;
  for (int i = 0; i < x.value.dim(); ++i) {
    if (x.value[i] == 0) continue;
    const int deg = hh_degree(ring.element(i).degree);
    auto [it, inserted] = parts.try_emplace(deg, ring.zero());
    it->second[i] += x.value[i];
  }
  return parts;
}

int hh_degree_of(const HHClass& x) {
  auto parts = hh_degree_split(x);
  if (parts.empty()) return 0;
  if (parts.size() > 1) throw ShapeError("class mixes Hochschild degrees");
  return parts.begin()->first;
}

Rational mukai_pairing(const HHClass& a, const HHClass& b) {
  if (a.space != b.space) throw SpaceMismatch("pairing across different spaces");
  return integrate(star(a.value) * b.value * a.space->todd);
}

Rational shklyarov_pairing(const HHClass& a, const HHClass& b) {
  if (a.space != b.space) throw SpaceMismatch("pairing across different spaces");
  return integrate(a.value * b.value * a.space->todd);
}

HHClass kunneth(const HHClass& a, const HHClass& b, const SpacePtr& xy) {
  if (!xy->is_product() || xy->factors[0] != a.space || xy->factors[1] != b.space) {
    throw SpaceMismatch("product space was not built from these factors");
  }
  return HHClass{xy, outer_product(a.value, b.value, xy->ring)};
}

std::vector<std::pair<HodgeClass, HodgeClass>> kunneth_inverse(const HHClass& on_product) {
  const auto& ts = on_product.space->ring->tensor_structure();
  if (!ts) throw ShapeError("kunneth_inverse needs a class on a product space");
  const int da = ts->left->dim(), db = ts->right->dim();
  std::vector<std::pair<HodgeClass, HodgeClass>> out;
  for (int j = 0; j < db; ++j) {
    std::vector<Rational> column(da, Rational(0));
    bool nonzero = false;
    for (int i = 0; i < da; ++i) {
      column[i] = on_product.value[i * db + j];
      nonzero = nonzero || column[i] != 0;
    }
    if (!nonzero) continue;
    out.emplace_back(HodgeClass(ts->left, std::move(column)), ts->right->basis_class(j));
  }
  return out;
}

namespace {

RationalMatrix pairing_gram(const SpacePtr& x, bool mukai) {
  const int d = x->ring->dim();
  RationalMatrix out(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) {
    HHClass a = basis_hh(x, i);
    for (int j = 0; j < d; ++j) {
      HHClass b = basis_hh(x, j);
      out[i][j] = mukai ? mukai_pairing(a, b) : shklyarov_pairing(a, b);
    }
  }
  return out;
}

}  // namespace

RationalMatrix mukai_gram(const SpacePtr& x) { return pairing_gram(x, true); }
RationalMatrix shklyarov_gram(const SpacePtr& x) { return pairing_gram(x, false); }

}  // namespace mukai
