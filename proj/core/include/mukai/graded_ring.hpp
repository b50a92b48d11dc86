#pragma once

#include <mukai/errors.hpp>
#include <mukai/linalg.hpp>
#include <mukai/rational.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mukai {

/// (form, coh) weight of a Hodge summand. "form" counts the differential-form
/// grading, "coh" the sheaf-cohomology grading.
struct Bidegree {
  int form = 0;
  int coh = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

constexpr int total_degree(Bidegree d) { return d.form + d.coh; }

/// Hochschild degree of a (form, coh) piece: form - coh.
constexpr int hh_degree(Bidegree d) { return d.form - d.coh; }

constexpr bool is_odd_degree(Bidegree d) { return (total_degree(d) & 1) != 0; }

struct BasisElement {
  std::string name;
  Bidegree degree;
};

/// One summand of a sparse product expansion.
struct Term {
  int index = 0;
  Rational coeff;
};
using LinearCombination = std::vector<Term>;

class BigradedAlgebra;
using AlgebraPtr = std::shared_ptr<const BigradedAlgebra>;

/// Element of a BigradedAlgebra: dense exact-rational coefficients over the
/// named monomial basis. Value semantics; the owning ring is immutable.
class HodgeClass {
 public:
  HodgeClass() = default;
  HodgeClass(AlgebraPtr owner, std::vector<Rational> coeffs);

  const AlgebraPtr& owner() const { return owner_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  Rational& operator[](int i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when every nonzero coefficient sits in the given bidegree.
  bool is_homogeneous(Bidegree d) const;

  HodgeClass& operator+=(const HodgeClass& rhs);
  HodgeClass& operator-=(const HodgeClass& rhs);
  HodgeClass& operator*=(const Rational& s);

  friend bool operator==(const HodgeClass& a, const HodgeClass& b);

 private:
  AlgebraPtr owner_;
  std::vector<Rational> coeffs_;
};

HodgeClass operator+(HodgeClass a, const HodgeClass& b);
HodgeClass operator-(HodgeClass a, const HodgeClass& b);
HodgeClass operator-(HodgeClass a);
HodgeClass operator*(const Rational& s, HodgeClass a);
HodgeClass operator*(HodgeClass a, const Rational& s);
/// Cup product through the structure constants (Koszul signs included there).
HodgeClass operator*(const HodgeClass& a, const HodgeClass& b);

/// Finite-dimensional bigraded-commutative ring with an integration
/// functional. Products of basis elements are given by explicit structure
/// constants; construction validates grading, the unit, the fundamental
/// class and graded commutativity.
class BigradedAlgebra : public std::enable_shared_from_this<BigradedAlgebra> {
 public:
  struct TensorStructure {
    AlgebraPtr left;
    AlgebraPtr right;
  };

  static AlgebraPtr make(std::string label, std::vector<BasisElement> basis,
                         std::vector<std::vector<LinearCombination>> products, int n,
                         std::optional<TensorStructure> tensor_structure = std::nullopt);

  int dim() const { return static_cast<int>(basis_.size()); }
  int n() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(int i) const { return basis_[i]; }
  int unit_index() const { return unit_index_; }
  int top_index() const { return top_index_; }
  /// Index of a named basis element, -1 when absent.
  int index_of(std::string_view name) const;

  const LinearCombination& basis_product(int i, int j) const { return products_[i][j]; }
  const std::optional<TensorStructure>& tensor_structure() const { return tensor_structure_; }

  HodgeClass zero() const;
  HodgeClass unit() const;
  HodgeClass basis_class(int i) const;
  HodgeClass make_class(std::vector<Rational> coeffs) const;

  /// Poincare Gram matrix G[i][j] = integral of e_i * e_j.
  const RationalMatrix& gram_matrix() const;
  const RationalMatrix& gram_inverse() const;
  /// Dual classes f^k with integral(e_k * f^l) = delta_{k,l}.
  const std::vector<HodgeClass>& dual_basis() const;

 private:
  BigradedAlgebra() = default;

  struct GramData {
    RationalMatrix gram;
    RationalMatrix inverse;
    std::vector<HodgeClass> duals;
  };
  const GramData& gram_data() const;

  std::string label_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<LinearCombination>> products_;
  int n_ = 0;
  int unit_index_ = -1;
  int top_index_ = -1;
  std::optional<TensorStructure> tensor_structure_;
  std::unordered_map<std::string, int> name_index_;

  mutable std::once_flag gram_once_;
  mutable std::unique_ptr<GramData> gram_;
};

/// Coefficient of the fundamental monomial; vanishes off bidegree (n, n).
Rational integrate(const HodgeClass& a);

/// Integral of t * e_i without materialising the product class.
Rational integral_against_basis(const HodgeClass& t, int i);

/// Gram matrix plus dual basis in one call; throws DegenerateRing when the
/// Poincare pairing is singular.
std::pair<RationalMatrix, std::vector<HodgeClass>> gram_and_dual_basis(const AlgebraPtr& ring);

/// Graded tensor product; basis is the pairwise product in row-major order
/// and products carry the sign (a x b)(a' x b') = (-1)^{|b||a'|} aa' x bb'.
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

/// a x b as an element of a previously built tensor ring.
HodgeClass outer_product(const HodgeClass& a, const HodgeClass& b, const AlgebraPtr& ab);

/// The signed factor swap a x b -> (-1)^{|a||b|} b x a. The one-argument form
/// builds the swapped ring; the two-argument form reuses an existing one.
HodgeClass koszul_swap(const HodgeClass& x);
HodgeClass koszul_swap(const HodgeClass& x, const AlgebraPtr& swapped_ring);

/// The unique class D in A x A with integral(D * (b x c)) = integral(a*b*c)
/// for all basis b, c. Solved exactly through the cached Gram inverse.
HodgeClass diagonal_pushforward(const HodgeClass& a, const AlgebraPtr& a_tensor_a);

HodgeClass component_of_bidegree(const HodgeClass& a, Bidegree d);
std::vector<int> indices_of_bidegree(const AlgebraPtr& ring, Bidegree d);

/// Leaf rings of an iterated tensor, left to right; one-dimensional leaves
/// are dropped (they never move an index).
std::vector<AlgebraPtr> flatten_factors(const AlgebraPtr& ring);

/// Re-own coefficients on a ring with the identical flattened leaf sequence
/// (tensor regrouping and unit-factor insertion are index-invariant).
HodgeClass reinterpret_on(const HodgeClass& x, const AlgebraPtr& target);

/// Insert x into a bigger tensor ring with units in every other leaf; the
/// flattened leaves of x must occupy positions [offset, offset + k) of the
/// whole ring's flattened leaves.
HodgeClass embed_at_leaf_offset(const HodgeClass& x, const AlgebraPtr& whole, int leaf_offset);

/// Integrate out every leaf not covered by keep_ranges (half-open, in leaf
/// positions of x's ring); target must consist of exactly the kept leaves.
HodgeClass integrate_out_leaves(const HodgeClass& x,
                                const std::vector<std::pair<int, int>>& keep_ranges,
                                const AlgebraPtr& target);

/// Same dimension, bidegrees and structure constants (names may differ).
bool same_structure(const AlgebraPtr& a, const AlgebraPtr& b);

/// "1 + 3/2*h + h^2" style rendering over the named basis; "0" when zero.
std::string format_class(const HodgeClass& x);

}  // namespace mukai
