#include <mukai/spaces.hpp>

#include <mukai/characteristic.hpp>

#include <functional>
#include <utility>

namespace mukai {

namespace {

SpacePtr finish_leaf(AlgebraPtr ring, int n, HodgeClass tangent, HodgeClass canonical,
                     std::string label) {
  auto space = std::make_shared<SpaceModel>();
  space->ring = std::move(ring);
  space->n = n;
  space->tangent_ch = std::move(tangent);
  space->todd = todd_from_ch(space->tangent_ch);
  space->canonical_ch = std::move(canonical);
  space->serre_ch = (n % 2 ? Rational(-1) : Rational(1)) * space->canonical_ch;
  space->label = std::move(label);
  return space;
}

}  // namespace

SpacePtr projective_space(int n) {
  if (n < 1 || n > 4) throw ShapeError("projective_space expects 1 <= n <= 4");
  std::vector<BasisElement> basis;
  for (int k = 0; k <= n; ++k) {
    std::string name = k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k));
    basis.push_back(BasisElement{std::move(name), Bidegree{k, k}});
  }
  std::vector<std::vector<LinearCombination>> products(n + 1, std::vector<LinearCombination>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i + j <= n) products[i][j] = {Term{i + j, Rational(1)}};
    }
  }
  auto ring = BigradedAlgebra::make("P^" + std::to_string(n), std::move(basis), std::move(products), n);

  // ch(T) = (n+1) e^h - 1, truncated by the ring itself.
  std::vector<Rational> tangent(n + 1, Rational(0));
  tangent[0] = n;
  for (int k = 1; k <= n; ++k) tangent[k] = Rational(n + 1) / factorial(k);
  // ch(O(-n-1)) = e^{-(n+1)h}
  std::vector<Rational> canonical(n + 1, Rational(0));
  Rational power(1);
  for (int k = 0; k <= n; ++k) {
    canonical[k] = power / factorial(k);
    power *= Rational(-(n + 1));
  }
  return finish_leaf(ring, n, ring->make_class(std::move(tangent)),
                     ring->make_class(std::move(canonical)), "P^" + std::to_string(n));
}

SpacePtr curve(int genus) {
  if (genus < 0 || genus > 3) throw ShapeError("curve expects 0 <= genus <= 3");
  const int g = genus;
  std::vector<BasisElement> basis;
  basis.push_back(BasisElement{"1", Bidegree{0, 0}});
  for (int i = 1; i <= g; ++i) basis.push_back(BasisElement{"a" + std::to_string(i), Bidegree{0, 1}});
  for (int i = 1; i <= g; ++i) basis.push_back(BasisElement{"b" + std::to_string(i), Bidegree{1, 0}});
  basis.push_back(BasisElement{"w", Bidegree{1, 1}});

  const int dim = 2 + 2 * g;
  const int w = dim - 1;
  auto a_idx = [g](int i) { return 1 + i; };      // i in [0, g)
  auto b_idx = [g](int i) { return 1 + g + i; };  // i in [0, g)

  std::vector<std::vector<LinearCombination>> products(dim, std::vector<LinearCombination>(dim));
  for (int i = 0; i < dim; ++i) {
    products[0][i] = {Term{i, Rational(1)}};
    if (i != 0) products[i][0] = {Term{i, Rational(1)}};
  }
  for (int i = 0; i < g; ++i) {
    products[a_idx(i)][b_idx(i)] = {Term{w, Rational(1)}};
    products[b_idx(i)][a_idx(i)] = {Term{w, Rational(-1)}};
  }

  std::string label = genus == 1 ? "E" : "C_g" + std::to_string(genus);
  auto ring = BigradedAlgebra::make(label, std::move(basis), std::move(products), 1);

  std::vector<Rational> tangent(dim, Rational(0));
  tangent[0] = 1;
  tangent[w] = 2 - 2 * g;
  std::vector<Rational> canonical(dim, Rational(0));
  canonical[0] = 1;
  canonical[w] = 2 * g - 2;
  return finish_leaf(ring, 1, ring->make_class(std::move(tangent)),
                     ring->make_class(std::move(canonical)), label);
}

SpacePtr point() {
  std::vector<BasisElement> basis{BasisElement{"1", Bidegree{0, 0}}};
  std::vector<std::vector<LinearCombination>> products{{{Term{0, Rational(1)}}}};
  auto ring = BigradedAlgebra::make("pt", std::move(basis), std::move(products), 0);
  auto space = std::make_shared<SpaceModel>();
  space->ring = ring;
  space->n = 0;
  space->tangent_ch = ring->zero();
  space->todd = ring->unit();
  space->canonical_ch = ring->unit();
  space->serre_ch = ring->unit();
  space->label = "pt";
  return space;
}

SpacePtr product(const SpacePtr& x, const SpacePtr& y) {
  auto space = std::make_shared<SpaceModel>();
  space->ring = tensor(x->ring, y->ring);
  space->n = x->n + y->n;
  HodgeClass unit_left = x->ring->unit();
  HodgeClass unit_right = y->ring->unit();
  space->tangent_ch = outer_product(x->tangent_ch, unit_right, space->ring) +
                      outer_product(unit_left, y->tangent_ch, space->ring);
  space->todd = outer_product(x->todd, y->todd, space->ring);
  space->canonical_ch = outer_product(x->canonical_ch, y->canonical_ch, space->ring);
  space->serre_ch = (space->n % 2 ? Rational(-1) : Rational(1)) * space->canonical_ch;
  space->label = x->label + " x " + y->label;
  space->factors = {x, y};
  return space;
}

SpacePtr with_todd(const SpacePtr& x, HodgeClass todd) {
  if (todd.owner() != x->ring) throw SpaceMismatch("todd class lives on a different ring");
  auto space = std::make_shared<SpaceModel>(*x);
  space->todd = std::move(todd);
  return space;
}

HodgeClass pullback_proj(const HodgeClass& x, int which, const SpacePtr& p) {
  if (!p->is_product()) throw ShapeError("pullback_proj needs a product space");
  if (which < 0 || which >= static_cast<int>(p->factors.size())) {
    throw SpaceMismatch("no such factor");
  }
  if (x.owner() != p->factors[which]->ring) {
    throw SpaceMismatch("class does not live on the tagged factor");
  }
  const auto& ts = *p->ring->tensor_structure();
  const int db = ts.right->dim();
  std::vector<Rational> out(p->ring->dim(), Rational(0));
  if (which == 0) {
    const int unit = ts.right->unit_index();
    for (int i = 0; i < x.dim(); ++i) {
      if (x[i] != 0) out[i * db + unit] = x[i];
    }
  } else {
    const int unit = ts.left->unit_index();
    for (int j = 0; j < x.dim(); ++j) {
      if (x[j] != 0) out[unit * db + j] = x[j];
    }
  }
  return HodgeClass(p->ring, std::move(out));
}

HodgeClass pushforward_proj(const HodgeClass& x, int onto, const SpacePtr& p) {
  if (!p->is_product()) throw ShapeError("pushforward_proj needs a product space");
  if (x.owner() != p->ring) throw SpaceMismatch("class does not live on the product");
  if (onto < 0 || onto >= static_cast<int>(p->factors.size())) {
    throw SpaceMismatch("no such factor");
  }
  const auto& ts = *p->ring->tensor_structure();
  const int db = ts.right->dim();
  const AlgebraPtr& kept = onto == 0 ? ts.left : ts.right;
  const AlgebraPtr& dropped = onto == 0 ? ts.right : ts.left;
  const int dropped_top = dropped->top_index();
  std::vector<Rational> out(kept->dim(), Rational(0));
  for (int i = 0; i < ts.left->dim(); ++i) {
    for (int j = 0; j < db; ++j) {
      const Rational& c = x[i * db + j];
      if (c == 0) continue;
      if (onto == 0 && j == dropped_top) out[i] += c;
      if (onto == 1 && i == dropped_top) out[j] += c;
    }
  }
  return HodgeClass(kept, std::move(out));
}

std::vector<SpacePtr> leaf_spaces(const SpacePtr& x) {
  std::vector<SpacePtr> out;
  std::function<void(const SpacePtr&)> walk = [&](const SpacePtr& s) {
    if (s->is_product()) {
      walk(s->factors[0]);
      walk(s->factors[1]);
    } else if (s->ring->dim() > 1) {
      out.push_back(s);
    }
  };
  walk(x);
  return out;
}

HodgeClass hyperplane_class(const SpacePtr& x) {
  auto hits = indices_of_bidegree(x->ring, Bidegree{1, 1});
  if (hits.size() != 1) {
    throw OutOfCatalog("space has no canonical degree-(1,1) generator: " + x->label);
  }
  return x->ring->basis_class(hits[0]);
}

}  // namespace mukai
