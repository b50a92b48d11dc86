#include <mukai/linalg.hpp>

#include <mukai/errors.hpp>

#include <cstddef>
#include <utility>

namespace mukai {

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
  const int rows = static_cast<int>(a.size());
  const int inner = rows ? static_cast<int>(a[0].size()) : 0;
  const int cols = inner ? static_cast<int>(b[0].size()) : 0;
  RationalMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        if (b[k][j] == 0) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

std::vector<Rational> matrix_apply(const RationalMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a[i][j] == 0 || v[j] == 0) continue;
      out[i] += a[i][j] * v[j];
    }
  }
  return out;
}

RationalMatrix matrix_inverse(const RationalMatrix& a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix work = a;
  RationalMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (work[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw DegenerateRing("singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational lead = work[col][col];
    if (lead != 1) {
      for (int j = 0; j < n; ++j) {
        if (work[col][j] != 0) work[col][j] /= lead;
        if (inv[col][j] != 0) inv[col][j] /= lead;
      }
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      const Rational factor = work[row][col];
      for (int j = 0; j < n; ++j) {
        if (work[col][j] != 0) work[row][j] -= factor * work[col][j];
        if (inv[col][j] != 0) inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

int matrix_rank(RationalMatrix rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int row = rank; row < m; ++row) {
      if (rows[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int row = 0; row < m; ++row) {
      if (row == rank || rows[row][col] == 0) continue;
      const Rational factor = rows[row][col] / rows[rank][col];
      for (int j = col; j < n; ++j) {
        if (rows[rank][j] != 0) rows[row][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

bool is_identity(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace mukai
