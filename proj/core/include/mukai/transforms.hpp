#pragma once

#include <mukai/hochschild.hpp>

#include <string>
#include <vector>

namespace mukai {

/// Cohomology-level integral-transform kernel: a class of total Hochschild
/// degree zero on the product of source and target, acting by convolution.
struct Kernel {
  SpacePtr source;
  SpacePtr target;
  SpacePtr domain;  // product(source, target); owns ch
  HHClass ch;
  std::string label;
};

/// Validates that domain = product(source, target), that ch lives there and
/// that every component has Hochschild degree zero.
Kernel make_kernel(SpacePtr source, SpacePtr target, SpacePtr domain, HodgeClass ch,
                   std::string label);

Kernel zero_kernel(const SpacePtr& x, const SpacePtr& y);
Kernel rank_one_kernel(const SpacePtr& x, const SpacePtr& y, const HodgeClass& left,
                       const HodgeClass& right, std::string label = {});

/// x |-> sum over Kunneth components: integral(x * alpha * td_source) * beta.
HHClass convolve(const Kernel& k, const HHClass& x);

/// Same map built from the Mukai pairing: sum of
/// mukai_pairing(W(x), alpha) * beta. Agrees with convolve; the verification
/// suite asserts the agreement instead of assuming it.
HHClass mukai_convolve(const Kernel& k, const HHClass& x);

/// Kernel composition in Kunneth coordinates:
/// sum (integral_Y(beta * gamma * td_Y)) alpha x delta.
Kernel compose(const Kernel& f, const Kernel& g);

/// The same composite through pullbacks to the triple product, cup products
/// and pushforward; implemented separately so the two routes can be compared.
Kernel compose_via_pushforward(const Kernel& f, const Kernel& g);

/// Kernel of the identity transform: the diagonal pushforward of td^{-1}.
/// Its matrix is the inverse of the Shklyarov Gram matrix.
Kernel identity_kernel(const SpacePtr& x);

/// Right-adjoint kernel: componentwise
/// (-1)^i W(beta) x (W(alpha) * serre_ch_source).
Kernel adjoint(const Kernel& f);

/// Koszul-signed reshuffle of ch(F) x ch(G) onto (X x X') x (Y x Y').
Kernel external_product(const Kernel& f, const Kernel& g);

/// Rebuild the kernel between spaces whose rings differ from the original
/// endpoints only by tensor regrouping or unit factors.
Kernel retarget(const Kernel& k, const SpacePtr& new_source, const SpacePtr& new_target);

/// Columns are the images of the source basis under convolve.
RationalMatrix transform_matrix(const Kernel& k);

/// Coefficients of k.ch as a (source dim) x (target dim) matrix.
RationalMatrix kernel_matrix(const Kernel& k);

bool same_kernel_coefficients(const Kernel& a, const Kernel& b);

/// One Grothendieck-Riemann-Roch projection check. The K-theoretic
/// pushforward of the external line bundle O(d_1) x ... x O(d_k) comes from
/// the classical cohomology catalog (binomial dimensions on P^n, the curve
/// Euler-characteristic formula); both sides are compared exactly.
struct GrrReport {
  bool ok = false;
  std::string description;
  std::string lhs;
  std::string rhs;
};

/// onto == -1 pushes everything to the point; otherwise onto names the kept
/// factor of a two-factor product of leaves. twists has one entry per leaf.
GrrReport grr_projection_check(const SpacePtr& total, int onto, const std::vector<int>& twists);

/// chi(O(d)) on a leaf space, by cohomology dimensions (P^n) or the classical
/// curve formula. Throws OutOfCatalog for anything else.
Rational euler_characteristic_oracle(const SpacePtr& leaf, int twist);

}  // namespace mukai
