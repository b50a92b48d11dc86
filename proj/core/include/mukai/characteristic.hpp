#pragma once

#include <mukai/spaces.hpp>

#include <optional>
#include <vector>

namespace mukai {

/// Bundle presented by Chern roots (each a (1,1)-homogeneous class) or by a
/// precomputed character for sheaf-level inputs.
struct BundleData {
  int rank = 0;
  std::vector<HodgeClass> chern_roots;
  std::optional<HodgeClass> ch;
};

BundleData bundle_from_roots(int rank, std::vector<HodgeClass> roots);
BundleData bundle_from_ch(HodgeClass ch);
/// O(twist) presented by the root twist * hyperplane_class(x).
BundleData line_bundle(const SpacePtr& x, int twist);

/// Sum of e^{root} over the roots, else the stored character.
HodgeClass chern_character(const BundleData& bundle, const SpaceModel& x);

/// Product of root/(1 - e^{-root}) over the roots; for character-level inputs
/// the power sums are read off the character instead.
HodgeClass todd_class(const BundleData& bundle, const SpaceModel& x);

/// Multiplies the (form, coh) summand by (-1)^coh. An involution.
HodgeClass star(const HodgeClass& x);

/// Multiplies the (form, coh) summand by (-1)^form. An involution; on
/// character-type classes it is dualisation: vee(ch(E)) = ch(E dual).
HodgeClass vee(const HodgeClass& x);

/// The involution matching star under the Hochschild-to-Hodge identification;
/// in this representation the two act by the same matrix.
HodgeClass w_involution(const HodgeClass& x);

/// Coefficients of x/(1 - e^{-x}) up to max_degree: 1, 1/2, 1/12, 0, -1/720...
std::vector<Rational> todd_series(int max_degree);

/// Coefficients of log(x/(1 - e^{-x})) up to max_degree.
std::vector<Rational> todd_log_series(int max_degree);

/// exp of a class with no constant term (finite sum; the ring is nilpotent
/// above its dimension).
HodgeClass exp_class(const HodgeClass& x);

/// Multiplicative inverse of a class with nonzero constant term.
HodgeClass unit_inverse(const HodgeClass& u);

/// Todd class of anything with the given character, via the power sums
/// p_k = k! * ch_k and td = exp(sum_k t_k p_k). Works for virtual inputs.
HodgeClass todd_from_ch(const HodgeClass& ch);

}  // namespace mukai
