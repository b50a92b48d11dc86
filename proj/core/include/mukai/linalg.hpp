#pragma once

#include <mukai/rational.hpp>

#include <vector>

namespace mukai {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(int n);
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> matrix_apply(const RationalMatrix& a, const std::vector<Rational>& v);

/// Exact Gauss-Jordan inverse. Throws DegenerateRing when singular.
RationalMatrix matrix_inverse(const RationalMatrix& a);

/// Rank of the row span (rows are consumed).
int matrix_rank(RationalMatrix rows);

bool is_identity(const RationalMatrix& a);

}  // namespace mukai
