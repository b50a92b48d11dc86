#pragma once

#include <mukai/graded_ring.hpp>

#include <memory>
#include <string>
#include <vector>

namespace mukai {

class SpaceModel;
using SpacePtr = std::shared_ptr<const SpaceModel>;

/// A smooth proper space presented by its Hodge-cohomology ring together with
/// the tangent data consumed by every Riemann-Roch style formula: ch(T), the
/// Todd class, ch of the canonical bundle and the Serre-twist character.
class SpaceModel {
 public:
  AlgebraPtr ring;
  int n = 0;
  HodgeClass tangent_ch;
  HodgeClass todd;
  HodgeClass canonical_ch;  // ch(Omega^n)
  HodgeClass serre_ch;      // (-1)^n * canonical_ch
  std::string label;
  std::vector<SpacePtr> factors;  // the two operands when built by product()

  bool is_product() const { return !factors.empty(); }
};

/// Truncated polynomial ring on h with h^{n+1} = 0; the builder caps n at 4.
SpacePtr projective_space(int n);

/// Smooth curve of genus g (g <= 3): basis {1, a_i, b_i, w} with
/// a_i b_j = delta_{ij} w and the symplectic sign convention.
SpacePtr curve(int genus);

/// Spec K: the one-dimensional ring in dimension zero.
SpacePtr point();

/// Tensor-product space; tangent data combines factorwise.
SpacePtr product(const SpacePtr& x, const SpacePtr& y);

/// Replace the Todd class, keeping everything else (test hook for negative
/// controls; the shipping CLI never calls it).
SpacePtr with_todd(const SpacePtr& x, HodgeClass todd);

/// pi^* from the tagged factor: inserts units in the other factor.
HodgeClass pullback_proj(const HodgeClass& x, int which, const SpacePtr& p);

/// pi_* onto the tagged factor: integrates out the complementary factor.
HodgeClass pushforward_proj(const HodgeClass& x, int onto, const SpacePtr& p);

/// Flattened leaf spaces (points dropped), aligned with flatten_factors of
/// the ring.
std::vector<SpacePtr> leaf_spaces(const SpacePtr& x);

/// The unique degree-(1,1) basis element (h on P^n, w on a curve). Throws
/// OutOfCatalog when the space has no canonical polarization.
HodgeClass hyperplane_class(const SpacePtr& x);

}  // namespace mukai
