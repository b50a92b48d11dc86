#include <mukai/quiver.hpp>

#include <mukai/characteristic.hpp>
#include <mukai/errors.hpp>
#include <mukai/spaces.hpp>

#include <map>
#include <queue>
#include <utility>

namespace mukai {

PathAlgebra PathAlgebra::make(int vertices, std::vector<Arrow> arrows, std::string label) {
  if (vertices <= 0) throw ShapeError("quiver needs at least one vertex");
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= vertices || a.target < 0 || a.target >= vertices) {
      throw ShapeError("arrow endpoint out of range");
    }
  }

  // Kahn's algorithm: reject oriented cycles, which would make A infinite.
  {
    std::vector<int> indegree(vertices, 0);
    for (const auto& a : arrows) ++indegree[a.target];
    std::queue<int> ready;
    for (int v = 0; v < vertices; ++v) {
      if (indegree[v] == 0) ready.push(v);
    }
    int seen = 0;
    while (!ready.empty()) {
      const int v = ready.front();
      ready.pop();
      ++seen;
      for (const auto& a : arrows) {
        if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
      }
    }
    if (seen != vertices) throw ShapeError("quiver has an oriented cycle");
  }

  PathAlgebra algebra;
  algebra.vertices_ = vertices;
  algebra.arrows_ = std::move(arrows);
  algebra.label_ = std::move(label);

  for (int v = 0; v < vertices; ++v) {
    algebra.basis_.push_back(Path{v, v, {}, "e" + std::to_string(v)});
  }
  // breadth-first path enumeration; finite because the quiver is acyclic
  std::size_t cursor = 0;
  while (cursor < algebra.basis_.size()) {
    const Path current = algebra.basis_[cursor++];
    for (std::size_t id = 0; id < algebra.arrows_.size(); ++id) {
      const auto& arrow = algebra.arrows_[id];
      if (arrow.source != current.target) continue;
      Path extended = current;
      extended.target = arrow.target;
      extended.arrows.push_back(static_cast<int>(id));
      extended.name = current.arrows.empty() ? arrow.name : current.name + arrow.name;
      algebra.basis_.push_back(std::move(extended));
    }
  }

  std::map<std::pair<int, std::vector<int>>, int> lookup;
  for (int i = 0; i < algebra.dim(); ++i) {
    lookup[{algebra.basis_[i].source, algebra.basis_[i].arrows}] = i;
  }
  algebra.table_.assign(algebra.dim(), std::vector<int>(algebra.dim(), -1));
  for (int i = 0; i < algebra.dim(); ++i) {
    for (int j = 0; j < algebra.dim(); ++j) {
      const Path& p = algebra.basis_[i];
      const Path& q = algebra.basis_[j];
      if (p.target != q.source) continue;
      std::vector<int> glued = p.arrows;
      glued.insert(glued.end(), q.arrows.begin(), q.arrows.end());
      algebra.table_[i][j] = lookup.at({p.source, glued});
    }
  }
  return algebra;
}

PathAlgebra kronecker_algebra() {
  return PathAlgebra::make(2, {{0, 1, "x"}, {0, 1, "y"}}, "kronecker");
}

PathAlgebra one_vertex_algebra() { return PathAlgebra::make(1, {}, "K"); }

PathAlgebra beilinson_algebra(int n) {
  if (n == 1) return kronecker_algebra();
  throw OutOfCatalog("Beilinson algebras with relations (n >= 2) are outside the catalog");
}

HH0Data hh0_classes(const PathAlgebra& a) {
  const int d = a.dim();
  RationalMatrix commutators;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> v(d, Rational(0));
      if (int ij = a.compose_paths(i, j); ij >= 0) v[ij] += 1;
      if (int ji = a.compose_paths(j, i); ji >= 0) v[ji] -= 1;
      bool nonzero = false;
      for (const auto& c : v) nonzero = nonzero || c != 0;
      if (nonzero) commutators.push_back(std::move(v));
    }
  }
  const int span_rank = matrix_rank(commutators);

  HH0Data out;
  out.dimension = d - span_rank;

  bool arrows_in = true;
  for (int i = a.vertex_count(); i < d; ++i) {
    if (a.basis()[i].arrows.size() != 1) continue;
    RationalMatrix extended = commutators;
    std::vector<Rational> v(d, Rational(0));
    v[i] = 1;
    extended.push_back(std::move(v));
    arrows_in = arrows_in && matrix_rank(extended) == span_rank;
  }
  out.arrows_in_commutator_span = arrows_in;

  RationalMatrix with_idempotents = commutators;
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<Rational> e(d, Rational(0));
    e[a.idempotent_index(v)] = 1;
    with_idempotents.push_back(std::move(e));
  }
  out.idempotents_span_quotient = matrix_rank(with_idempotents) == span_rank + a.vertex_count() &&
                                  out.dimension == a.vertex_count();
  return out;
}

std::vector<std::vector<long>> euler_matrix(const PathAlgebra& a) {
  std::vector<std::vector<long>> out(a.vertex_count(), std::vector<long>(a.vertex_count(), 0));
  for (const auto& p : a.basis()) ++out[p.source][p.target];
  return out;
}

CrossCheckReport geometric_cross_check(bool corrupt_todd) {
  CrossCheckReport report;
  const PathAlgebra algebra = kronecker_algebra();
  report.algebra_matrix = euler_matrix(algebra);

  const SpacePtr line = projective_space(1);
  HodgeClass td = line->todd;
  if (corrupt_todd) {
    td = component_of_bidegree(td, Bidegree{0, 0});  // drop the curvature term
  }
  report.geometric_matrix.assign(2, std::vector<Rational>(2, Rational(0)));
  bool ok = true;
  for (int i = 0; i <= 1; ++i) {
    const HodgeClass chi = chern_character(line_bundle(line, i), *line);
    for (int j = 0; j <= 1; ++j) {
      const HodgeClass chj = chern_character(line_bundle(line, j), *line);
      report.geometric_matrix[i][j] = integrate(vee(chi) * chj * td);
      ok = ok && report.geometric_matrix[i][j] == Rational(report.algebra_matrix[i][j]);
    }
  }
  report.ok = ok;
  report.note =
      "paths compose source-to-target, so dim e_i A e_j counts paths i -> j and matches "
      "dim Hom(O(i), O(j)) without a transpose";
  return report;
}

}  // namespace mukai
