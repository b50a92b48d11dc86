#include <doctest.h>

#include <mukai/errors.hpp>
#include <mukai/linalg.hpp>

using namespace mukai;

TEST_CASE("exact inverse of a 3x3 matrix") {
  RationalMatrix m = {{Rational(2), Rational(1), Rational(0)},
                      {Rational(0), Rational(1), Rational(3)},
                      {Rational(1), Rational(0), Rational(1)}};
  RationalMatrix inv = matrix_inverse(m);
  CHECK(is_identity(matrix_product(m, inv)));
  CHECK(is_identity(matrix_product(inv, m)));
}

TEST_CASE("singular matrices are rejected") {
  RationalMatrix m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(matrix_inverse(m), DegenerateRing);
  CHECK(matrix_rank(m) == 1);
}

TEST_CASE("rank of assorted shapes") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{Rational(0), Rational(0)}}) == 0);
  CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                     {Rational(1), Rational(1)}}) == 2);
}

TEST_CASE("matrix_apply agrees with matrix_product on columns") {
  RationalMatrix m = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  auto v = matrix_apply(m, {Rational(5), Rational(-1)});
  CHECK(v[0] == Rational(3));
  CHECK(v[1] == Rational(11));
}
