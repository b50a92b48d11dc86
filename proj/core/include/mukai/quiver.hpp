#pragma once

#include <mukai/linalg.hpp>

#include <string>
#include <vector>

namespace mukai {

/// Relation-free path algebra of a finite directed acyclic quiver. The basis
/// is every path (idempotents included); products concatenate when endpoints
/// match and vanish otherwise.
class PathAlgebra {
 public:
  struct Arrow {
    int source = 0;
    int target = 0;
    std::string name;
  };

  struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // empty for an idempotent
    std::string name;
  };

  /// Throws ShapeError on oriented cycles.
  static PathAlgebra make(int vertices, std::vector<Arrow> arrows, std::string label);

  int dim() const { return static_cast<int>(basis_.size()); }
  int vertex_count() const { return vertices_; }
  const std::string& label() const { return label_; }
  const std::vector<Path>& basis() const { return basis_; }
  int idempotent_index(int vertex) const { return vertex; }

  /// Index of path i followed by path j, or -1 when the endpoints mismatch.
  int compose_paths(int i, int j) const { return table_[i][j]; }

 private:
  int vertices_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<Path> basis_;
  std::vector<std::vector<int>> table_;
  std::string label_;
};

/// Two vertices, two parallel arrows; dimension 4.
PathAlgebra kronecker_algebra();

/// One vertex, no arrows: the base field.
PathAlgebra one_vertex_algebra();

/// n = 1 is the Kronecker algebra; anything larger needs relations and is
/// rejected with OutOfCatalog.
PathAlgebra beilinson_algebra(int n);

struct HH0Data {
  int dimension = 0;
  bool arrows_in_commutator_span = false;
  bool idempotents_span_quotient = false;
};

/// A modulo the span of all commutators of basis paths.
HH0Data hh0_classes(const PathAlgebra& a);

/// E[i][j] = dim e_i A e_j, the path-count matrix.
std::vector<std::vector<long>> euler_matrix(const PathAlgebra& a);

struct CrossCheckReport {
  bool ok = false;
  std::vector<std::vector<long>> algebra_matrix;
  RationalMatrix geometric_matrix;
  std::string note;
};

/// Compares the Kronecker path-count matrix against the geometric matrix
/// integral( vee(ch O(i)) * ch O(j) * td ) on the rational line, i, j in
/// {0, 1}. corrupt_todd drops the curvature term of td as a designed failure.
CrossCheckReport geometric_cross_check(bool corrupt_todd = false);

}  // namespace mukai
