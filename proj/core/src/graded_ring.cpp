#include <mukai/graded_ring.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>

namespace mukai {

namespace {

LinearCombination normalized(LinearCombination lc) {
  std::sort(lc.begin(), lc.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  LinearCombination out;
  for (auto& t : lc) {
    if (t.coeff == 0) continue;
    if (!out.empty() && out.back().index == t.index) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool same_combination(const LinearCombination& a, const LinearCombination& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index || a[i].coeff != b[i].coeff) return false;
  }
  return true;
}

std::string wrap_tensor_name(const std::string& name) {
  if (name.find("\xE2\x8A\x97") != std::string::npos) return "(" + name + ")";
  return name;
}

std::vector<int> leaf_dims(const std::vector<AlgebraPtr>& leaves) {
  std::vector<int> dims;
  dims.reserve(leaves.size());
  for (const auto& l : leaves) dims.push_back(l->dim());
  return dims;
}

void decode_mixed_radix(int index, const std::vector<int>& dims, std::vector<int>& digits) {
  digits.assign(dims.size(), 0);
  for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
    digits[pos] = index % dims[pos];
    index /= dims[pos];
  }
}

int encode_mixed_radix(const std::vector<int>& digits, const std::vector<int>& dims) {
  int index = 0;
  for (std::size_t pos = 0; pos < dims.size(); ++pos) index = index * dims[pos] + digits[pos];
  return index;
}

}  // namespace

HodgeClass::HodgeClass(AlgebraPtr owner, std::vector<Rational> coeffs)
    : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {
  if (!owner_) throw ShapeError("HodgeClass needs an owning ring");
  if (static_cast<int>(coeffs_.size()) != owner_->dim()) {
    throw ShapeError("coefficient vector length does not match the basis");
  }
}

bool HodgeClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool HodgeClass::is_homogeneous(Bidegree d) const {
  for (int i = 0; i < dim(); ++i) {
    if (coeffs_[i] != 0 && !(owner_->element(i).degree == d)) return false;
  }
  return true;
}

HodgeClass& HodgeClass::operator+=(const HodgeClass& rhs) {
  if (owner_ != rhs.owner_) throw SpaceMismatch("classes live on different spaces");
  for (int i = 0; i < dim(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

HodgeClass& HodgeClass::operator-=(const HodgeClass& rhs) {
  if (owner_ != rhs.owner_) throw SpaceMismatch("classes live on different spaces");
  for (int i = 0; i < dim(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

HodgeClass& HodgeClass::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const HodgeClass& a, const HodgeClass& b) {
  return a.owner_ == b.owner_ && a.coeffs_ == b.coeffs_;
}

HodgeClass operator+(HodgeClass a, const HodgeClass& b) { return a += b; }
HodgeClass operator-(HodgeClass a, const HodgeClass& b) { return a -= b; }

HodgeClass operator-(HodgeClass a) {
  return a *= Rational(-1);
}

HodgeClass operator*(const Rational& s, HodgeClass a) { return a *= s; }
HodgeClass operator*(HodgeClass a, const Rational& s) { return a *= s; }

HodgeClass operator*(const HodgeClass& a, const HodgeClass& b) {
  if (a.owner() != b.owner()) throw SpaceMismatch("cup product across different spaces");
  const auto& ring = *a.owner();
  std::vector<Rational> out(ring.dim(), Rational(0));
  for (int i = 0; i < ring.dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < ring.dim(); ++j) {
      if (b[j] == 0) continue;
      const Rational scale = a[i] * b[j];
      for (const auto& t : ring.basis_product(i, j)) out[t.index] += scale * t.coeff;
    }
  }
  return HodgeClass(a.owner(), std::move(out));
}

AlgebraPtr BigradedAlgebra::make(std::string label, std::vector<BasisElement> basis,
                                 std::vector<std::vector<LinearCombination>> products, int n,
                                 std::optional<TensorStructure> tensor_structure) {
  auto ring = std::shared_ptr<BigradedAlgebra>(new BigradedAlgebra());
  ring->label_ = std::move(label);
  ring->basis_ = std::move(basis);
  ring->products_ = std::move(products);
  ring->n_ = n;
  ring->tensor_structure_ = std::move(tensor_structure);

  const int dim = ring->dim();
  if (dim == 0) throw ShapeError("empty basis");
  if (n < 0) throw ShapeError("negative dimension");
  if (static_cast<int>(ring->products_.size()) != dim) throw ShapeError("product table has wrong shape");

  for (int i = 0; i < dim; ++i) {
    const auto& el = ring->basis_[i];
    if (el.degree.form < 0 || el.degree.coh < 0 || el.degree.form > n || el.degree.coh > n) {
      throw ShapeError("basis bidegree out of range: " + el.name);
    }
    if (!ring->name_index_.emplace(el.name, i).second) {
      throw ShapeError("duplicate basis name: " + el.name);
    }
    if (el.degree == Bidegree{0, 0}) {
      if (ring->unit_index_ >= 0 && n > 0) throw ShapeError("two unit candidates");
      if (ring->unit_index_ < 0) ring->unit_index_ = i;
    }
    if (el.degree == Bidegree{n, n}) {
      if (ring->top_index_ >= 0 && n > 0) throw ShapeError("two fundamental classes");
      ring->top_index_ = i;
    }
  }
  if (ring->unit_index_ < 0) throw ShapeError("no unit of bidegree (0,0)");
  if (ring->top_index_ < 0) throw ShapeError("no fundamental class of bidegree (n,n)");

  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(ring->products_[i].size()) != dim) throw ShapeError("product table has wrong shape");
    for (int j = 0; j < dim; ++j) {
      auto& entry = ring->products_[i][j];
      entry = normalized(std::move(entry));
      const Bidegree expected{ring->basis_[i].degree.form + ring->basis_[j].degree.form,
                              ring->basis_[i].degree.coh + ring->basis_[j].degree.coh};
      if (expected.form > n || expected.coh > n) {
        if (!entry.empty()) throw ShapeError("product above dimension must vanish");
        continue;
      }
      for (const auto& t : entry) {
        if (t.index < 0 || t.index >= dim) throw ShapeError("product index out of range");
        if (!(ring->basis_[t.index].degree == expected)) {
          throw ShapeError("product is not bidegree-additive at " + ring->basis_[i].name + " * " +
                           ring->basis_[j].name);
        }
      }
    }
  }

  const int u = ring->unit_index_;
  for (int i = 0; i < dim; ++i) {
    const LinearCombination expected{{i, Rational(1)}};
    if (!same_combination(ring->products_[u][i], expected) ||
        !same_combination(ring->products_[i][u], expected)) {
      throw ShapeError("unit does not act as identity");
    }
  }

  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < i; ++j) {
      const bool flip = is_odd_degree(ring->basis_[i].degree) && is_odd_degree(ring->basis_[j].degree);
      LinearCombination mirrored = ring->products_[j][i];
      if (flip) {
        for (auto& t : mirrored) t.coeff = -t.coeff;
      }
      if (!same_combination(ring->products_[i][j], mirrored)) {
        throw ShapeError("graded commutativity fails at " + ring->basis_[i].name + " * " +
                         ring->basis_[j].name);
      }
    }
  }

  return ring;
}

int BigradedAlgebra::index_of(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  return it == name_index_.end() ? -1 : it->second;
}

HodgeClass BigradedAlgebra::zero() const {
  return HodgeClass(shared_from_this(), std::vector<Rational>(dim(), Rational(0)));
}

HodgeClass BigradedAlgebra::unit() const { return basis_class(unit_index_); }

HodgeClass BigradedAlgebra::basis_class(int i) const {
  std::vector<Rational> c(dim(), Rational(0));
  c.at(i) = 1;
  return HodgeClass(shared_from_this(), std::move(c));
}

HodgeClass BigradedAlgebra::make_class(std::vector<Rational> coeffs) const {
  return HodgeClass(shared_from_this(), std::move(coeffs));
}

const BigradedAlgebra::GramData& BigradedAlgebra::gram_data() const {
  std::call_once(gram_once_, [this] {
    auto data = std::make_unique<GramData>();
    const int d = dim();
    data->gram.assign(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (const auto& t : products_[i][j]) {
          if (t.index == top_index_) data->gram[i][j] = t.coeff;
        }
      }
    }
    data->inverse = matrix_inverse(data->gram);  // throws DegenerateRing
    data->duals.reserve(d);
    for (int l = 0; l < d; ++l) {
      std::vector<Rational> col(d);
      for (int k = 0; k < d; ++k) col[k] = data->inverse[k][l];
      data->duals.push_back(HodgeClass(shared_from_this(), std::move(col)));
    }
    gram_ = std::move(data);
  });
  return *gram_;
}

const RationalMatrix& BigradedAlgebra::gram_matrix() const { return gram_data().gram; }
const RationalMatrix& BigradedAlgebra::gram_inverse() const { return gram_data().inverse; }
const std::vector<HodgeClass>& BigradedAlgebra::dual_basis() const { return gram_data().duals; }

Rational integrate(const HodgeClass& a) { return a[a.owner()->top_index()]; }

Rational integral_against_basis(const HodgeClass& t, int i) {
  const auto& ring = *t.owner();
  const int top = ring.top_index();
  Rational out(0);
  for (int k = 0; k < ring.dim(); ++k) {
    if (t[k] == 0) continue;
    for (const auto& term : ring.basis_product(k, i)) {
      if (term.index == top) out += t[k] * term.coeff;
    }
  }
  return out;
}

std::pair<RationalMatrix, std::vector<HodgeClass>> gram_and_dual_basis(const AlgebraPtr& ring) {
  return {ring->gram_matrix(), ring->dual_basis()};
}

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  const int da = a->dim(), db = b->dim();
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(da) * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      basis.push_back(BasisElement{
          wrap_tensor_name(a->element(i).name) + "\xE2\x8A\x97" + wrap_tensor_name(b->element(j).name),
          Bidegree{a->element(i).degree.form + b->element(j).degree.form,
                   a->element(i).degree.coh + b->element(j).degree.coh}});
    }
  }

  const int dim = da * db;
  std::vector<std::vector<LinearCombination>> products(dim, std::vector<LinearCombination>(dim));
  const int n = a->n() + b->n();
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int k = 0; k < da; ++k) {
        const bool flip = is_odd_degree(b->element(j).degree) && is_odd_degree(a->element(k).degree);
        const auto& left = a->basis_product(i, k);
        for (int l = 0; l < db; ++l) {
          const auto& right = b->basis_product(j, l);
          if (left.empty() || right.empty()) continue;
          LinearCombination& out = products[i * db + j][k * db + l];
          for (const auto& lt : left) {
            for (const auto& rt : right) {
              Rational c = lt.coeff * rt.coeff;
              if (flip) c = -c;
              out.push_back(Term{lt.index * db + rt.index, std::move(c)});
            }
          }
        }
      }
    }
  }

  return BigradedAlgebra::make(a->label() + " \xE2\x8A\x97 " + b->label(), std::move(basis),
                               std::move(products), n, BigradedAlgebra::TensorStructure{a, b});
}

HodgeClass outer_product(const HodgeClass& a, const HodgeClass& b, const AlgebraPtr& ab) {
  const auto& ts = ab->tensor_structure();
  if (!ts || ts->left != a.owner() || ts->right != b.owner()) {
    throw SpaceMismatch("outer product target is not the tensor of the operand rings");
  }
  const int db = b.dim();
  std::vector<Rational> out(ab->dim(), Rational(0));
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < db; ++j) {
      if (b[j] == 0) continue;
      out[i * db + j] = a[i] * b[j];
    }
  }
  return HodgeClass(ab, std::move(out));
}

HodgeClass koszul_swap(const HodgeClass& x) {
  const auto& ts = x.owner()->tensor_structure();
  if (!ts) throw ShapeError("koszul_swap needs a tensor-ring element");
  return koszul_swap(x, tensor(ts->right, ts->left));
}

HodgeClass koszul_swap(const HodgeClass& x, const AlgebraPtr& swapped_ring) {
  const auto& ts = x.owner()->tensor_structure();
  if (!ts) throw ShapeError("koszul_swap needs a tensor-ring element");
  const auto& st = swapped_ring->tensor_structure();
  if (!st || st->left != ts->right || st->right != ts->left) {
    throw ShapeError("target ring is not the swapped tensor");
  }
  const int da = ts->left->dim(), db = ts->right->dim();
  std::vector<Rational> out(swapped_ring->dim(), Rational(0));
  for (int i = 0; i < da; ++i) {
    const bool ai_odd = is_odd_degree(ts->left->element(i).degree);
    for (int j = 0; j < db; ++j) {
      const Rational& c = x[i * db + j];
      if (c == 0) continue;
      const bool flip = ai_odd && is_odd_degree(ts->right->element(j).degree);
      out[j * da + i] = flip ? -c : c;
    }
  }
  return HodgeClass(swapped_ring, std::move(out));
}

HodgeClass diagonal_pushforward(const HodgeClass& a, const AlgebraPtr& a_tensor_a) {
  const auto& ts = a_tensor_a->tensor_structure();
  if (!ts || ts->left != a.owner() || ts->right != a.owner()) {
    throw SpaceMismatch("diagonal pushforward target must be A tensor A");
  }
  const auto& ring = *a.owner();
  const int d = ring.dim();
  const int dd = a_tensor_a->dim();

  // rhs[u] = integral_A(a * e_b * e_c) for u = (b, c)
  std::vector<Rational> rhs(dd, Rational(0));
  for (int b = 0; b < d; ++b) {
    HodgeClass ab = a * ring.basis_class(b);
    if (ab.is_zero()) continue;
    for (int c = 0; c < d; ++c) rhs[b * d + c] = integral_against_basis(ab, c);
  }

  // Adjunction in coordinates: x^T G = rhs^T, so x = (G^{-1})^T rhs.
  const RationalMatrix& inv = a_tensor_a->gram_inverse();
  std::vector<Rational> out(dd, Rational(0));
  for (int u = 0; u < dd; ++u) {
    if (rhs[u] == 0) continue;
    for (int v = 0; v < dd; ++v) {
      if (inv[u][v] == 0) continue;
      out[v] += inv[u][v] * rhs[u];
    }
  }
  return HodgeClass(a_tensor_a, std::move(out));
}

HodgeClass component_of_bidegree(const HodgeClass& a, Bidegree d) {
  std::vector<Rational> out(a.dim(), Rational(0));
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != 0 && a.owner()->element(i).degree == d) out[i] = a[i];
  }
  return HodgeClass(a.owner(), std::move(out));
}

std::vector<int> indices_of_bidegree(const AlgebraPtr& ring, Bidegree d) {
  std::vector<int> out;
  for (int i = 0; i < ring->dim(); ++i) {
    if (ring->element(i).degree == d) out.push_back(i);
  }
  return out;
}

std::vector<AlgebraPtr> flatten_factors(const AlgebraPtr& ring) {
  std::vector<AlgebraPtr> out;
  std::function<void(const AlgebraPtr&)> walk = [&](const AlgebraPtr& r) {
    if (const auto& ts = r->tensor_structure()) {
      walk(ts->left);
      walk(ts->right);
    } else if (r->dim() > 1) {
      out.push_back(r);
    }
  };
  walk(ring);
  return out;
}

HodgeClass reinterpret_on(const HodgeClass& x, const AlgebraPtr& target) {
  if (x.owner() == target) return x;
  if (flatten_factors(x.owner()) != flatten_factors(target) || x.owner()->dim() != target->dim()) {
    throw SpaceMismatch("rings differ beyond tensor regrouping");
  }
  return HodgeClass(target, x.coeffs());
}

HodgeClass embed_at_leaf_offset(const HodgeClass& x, const AlgebraPtr& whole, int leaf_offset) {
  const auto whole_leaves = flatten_factors(whole);
  const auto part_leaves = flatten_factors(x.owner());
  if (leaf_offset < 0 ||
      leaf_offset + static_cast<int>(part_leaves.size()) > static_cast<int>(whole_leaves.size())) {
    throw SpaceMismatch("leaf offset out of range");
  }
  for (std::size_t i = 0; i < part_leaves.size(); ++i) {
    if (whole_leaves[leaf_offset + static_cast<int>(i)] != part_leaves[i]) {
      throw SpaceMismatch("leaf sequence mismatch in embedding");
    }
  }
  const auto dims = leaf_dims(whole_leaves);
  std::vector<int> digits(dims.size(), 0);
  for (std::size_t pos = 0; pos < dims.size(); ++pos) {
    digits[pos] = whole_leaves[pos]->unit_index();
  }
  const auto part_dims = leaf_dims(part_leaves);
  std::vector<int> part_digits;
  std::vector<Rational> out(whole->dim(), Rational(0));
  for (int idx = 0; idx < x.dim(); ++idx) {
    if (x[idx] == 0) continue;
    decode_mixed_radix(idx, part_dims, part_digits);
    for (std::size_t i = 0; i < part_dims.size(); ++i) {
      digits[leaf_offset + static_cast<int>(i)] = part_digits[i];
    }
    out[encode_mixed_radix(digits, dims)] = x[idx];
  }
  return HodgeClass(whole, std::move(out));
}

HodgeClass integrate_out_leaves(const HodgeClass& x,
                                const std::vector<std::pair<int, int>>& keep_ranges,
                                const AlgebraPtr& target) {
  const auto leaves = flatten_factors(x.owner());
  std::vector<bool> keep(leaves.size(), false);
  std::vector<AlgebraPtr> kept_leaves;
  for (const auto& [lo, hi] : keep_ranges) {
    if (lo < 0 || hi > static_cast<int>(leaves.size()) || lo > hi) {
      throw SpaceMismatch("keep range out of bounds");
    }
    for (int p = lo; p < hi; ++p) {
      keep[p] = true;
      kept_leaves.push_back(leaves[p]);
    }
  }
  if (flatten_factors(target) != kept_leaves) {
    throw SpaceMismatch("target ring does not match the kept leaves");
  }

  const auto dims = leaf_dims(leaves);
  std::vector<int> kept_dims = leaf_dims(kept_leaves);
  std::vector<int> digits, kept_digits(kept_leaves.size(), 0);
  std::vector<Rational> out(target->dim(), Rational(0));
  for (int idx = 0; idx < x.dim(); ++idx) {
    if (x[idx] == 0) continue;
    decode_mixed_radix(idx, dims, digits);
    bool survives = true;
    std::size_t kp = 0;
    for (std::size_t pos = 0; pos < leaves.size(); ++pos) {
      if (keep[pos]) {
        kept_digits[kp++] = digits[pos];
      } else if (digits[pos] != leaves[pos]->top_index()) {
        // the dropped factor integrates to zero off its fundamental class
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    out[encode_mixed_radix(kept_digits, kept_dims)] += x[idx];
  }
  return HodgeClass(target, std::move(out));
}

std::string format_class(const HodgeClass& x) {
  std::string out;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    const bool negative = x[i] < 0;
    const Rational magnitude = negative ? Rational(-x[i]) : x[i];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string& name = x.owner()->element(i).name;
    const bool is_unit = i == x.owner()->unit_index();
    if (magnitude == 1 && !is_unit) {
      out += name;
    } else if (is_unit) {
      out += pretty_string(magnitude);
    } else {
      out += pretty_string(magnitude) + "*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

bool same_structure(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->dim() != b->dim() || a->n() != b->n()) return false;
  for (int i = 0; i < a->dim(); ++i) {
    if (!(a->element(i).degree == b->element(i).degree)) return false;
  }
  for (int i = 0; i < a->dim(); ++i) {
    for (int j = 0; j < a->dim(); ++j) {
      if (!same_combination(a->basis_product(i, j), b->basis_product(i, j))) return false;
    }
  }
  return true;
}

}  // namespace mukai
