#include <doctest.h>

#include <mukai/characteristic.hpp>
#include <mukai/spaces.hpp>

using namespace mukai;

TEST_CASE("projective space tangent data") {
  auto p1 = projective_space(1);
  CHECK(format_class(p1->tangent_ch) == "1 + 2*h");
  CHECK(format_class(p1->todd) == "1 + h");
  CHECK(format_class(p1->serre_ch) == "-1 + 2*h");  // -(1 - 2h)

  auto p2 = projective_space(2);
  CHECK(format_class(p2->todd) == "1 + 3/2*h + h^2");
  CHECK(integrate(p2->todd) == Rational(1));

  auto p3 = projective_space(3);
  CHECK(format_class(p3->todd) == "1 + 2*h + 11/6*h^2 + h^3");
  CHECK(integrate(p3->todd) == Rational(1));

  CHECK_THROWS_AS(projective_space(0), ShapeError);
  CHECK_THROWS_AS(projective_space(5), ShapeError);
}

TEST_CASE("curves carry the expected genus data") {
  auto e = curve(1);
  CHECK(e->todd == e->ring->unit());  // c1(T) = 0
  CHECK(integrate(curve(2)->todd) == Rational(-1));
  for (int g = 0; g <= 3; ++g) {
    CHECK(integrate(curve(g)->todd) == Rational(1 - g));
  }
  CHECK_THROWS_AS(curve(-1), ShapeError);
  CHECK_THROWS_AS(curve(4), ShapeError);
}

TEST_CASE("the genus-zero curve is the line in disguise") {
  CHECK(same_structure(curve(0)->ring, projective_space(1)->ring));
}

TEST_CASE("products multiply tangent data") {
  auto p1 = projective_space(1);
  auto q = product(p1, p1);
  CHECK(q->todd == outer_product(p1->todd, p1->todd, q->ring));
  CHECK(integrate(q->todd) == Rational(1));  // chi(O) of the quadric

  auto e = curve(1);
  CHECK(product(e, e)->ring->dim() == 16);
  CHECK(integrate(product(p1, e)->todd) == Rational(0));

  auto padded = product(p1, point());
  CHECK(same_structure(padded->ring, p1->ring));
  CHECK(padded->n == 1);
}

TEST_CASE("chi(O) equals the Todd integral on every builder output") {
  for (const auto& space : {projective_space(1), projective_space(2), projective_space(3),
                            projective_space(4)}) {
    CHECK(integrate(space->todd) == Rational(1));
  }
  CHECK(integrate(point()->todd) == Rational(1));
}

TEST_CASE("serre data identities hold for every builder") {
  for (const auto& space :
       {projective_space(1), projective_space(2), projective_space(3), curve(0), curve(1),
        curve(2), curve(3), product(projective_space(1), curve(1))}) {
    const Rational sign = space->n % 2 ? Rational(-1) : Rational(1);
    CHECK(space->serre_ch == sign * space->canonical_ch);
    CHECK(space->todd * space->canonical_ch == star(space->todd));
    CHECK(space->todd[space->ring->unit_index()] == Rational(1));
  }
}

TEST_CASE("product is associative up to the canonical reindexing") {
  auto a = projective_space(1);
  auto b = curve(1);
  auto c = projective_space(2);
  CHECK(same_structure(product(product(a, b), c)->ring, product(a, product(b, c))->ring));
}

TEST_CASE("projection pullbacks insert units") {
  auto p1 = projective_space(1);
  auto second = projective_space(1);
  auto q = product(p1, second);
  HodgeClass h = second->ring->basis_class(1);
  CHECK(pullback_proj(h, 1, q) == outer_product(p1->ring->unit(), h, q->ring));
  CHECK(pullback_proj(second->ring->unit(), 1, q) == q->ring->unit());
  // even classes: pi_X^* x . pi_Y^* y = x tensor y
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      HodgeClass x = p1->ring->basis_class(i);
      HodgeClass y = second->ring->basis_class(j);
      CHECK(pullback_proj(x, 0, q) * pullback_proj(y, 1, q) == outer_product(x, y, q->ring));
    }
  }
  CHECK_THROWS_AS(pullback_proj(h, 0, q), SpaceMismatch);  // h lives on the second factor
  CHECK_THROWS_AS(pullback_proj(h, 2, q), SpaceMismatch);
}

TEST_CASE("projection pushforwards integrate the complementary factor") {
  auto p1 = projective_space(1);
  auto second = projective_space(1);
  auto q = product(p1, second);
  HodgeClass h_left = p1->ring->basis_class(1);
  for (int j = 0; j < 2; ++j) {
    HodgeClass x = second->ring->basis_class(j);
    CHECK(pushforward_proj(outer_product(h_left, x, q->ring), 1, q) == x);
    CHECK(pushforward_proj(outer_product(p1->ring->unit(), x, q->ring), 1, q) ==
          second->ring->zero());
  }

  // projection formula over the full basis
  for (int j = 0; j < 2; ++j) {
    HodgeClass y = second->ring->basis_class(j);
    for (int u = 0; u < q->ring->dim(); ++u) {
      HodgeClass x = q->ring->basis_class(u);
      CHECK(pushforward_proj(pullback_proj(y, 1, q) * x, 1, q) == y * pushforward_proj(x, 1, q));
    }
  }

  // pushforward of a pullback dies unless the complementary factor is a point
  for (int j = 0; j < 2; ++j) {
    HodgeClass y = second->ring->basis_class(j);
    CHECK(pushforward_proj(pullback_proj(y, 1, q), 1, q) == second->ring->zero());
  }
  auto with_point = product(p1, point());
  CHECK(pushforward_proj(pullback_proj(p1->ring->basis_class(1), 0, with_point), 0, with_point) ==
        p1->ring->basis_class(1));

  CHECK_THROWS_AS(pushforward_proj(h_left, 0, q), SpaceMismatch);
}

TEST_CASE("hyperplane classes exist exactly on polarized leaves") {
  auto p2 = projective_space(2);
  CHECK(hyperplane_class(p2) == p2->ring->basis_class(1));
  auto e = curve(1);
  CHECK(hyperplane_class(e) == e->ring->basis_class(e->ring->index_of("w")));
  CHECK_THROWS_AS(hyperplane_class(point()), OutOfCatalog);
  CHECK_THROWS_AS(hyperplane_class(product(e, e)), OutOfCatalog);
}

TEST_CASE("leaf spaces flatten through nested products and points") {
  auto p1 = projective_space(1);
  auto e = curve(1);
  auto nested = product(product(p1, point()), product(e, p1));
  auto leaves = leaf_spaces(nested);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[0] == p1);
  CHECK(leaves[1] == e);
  CHECK(leaves[2] == p1);
}
