#pragma once

#include <mukai/transforms.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mukai {

/// The built-in space corpus every suite runs over. Leaf spaces are built
/// once and reused so factor identities hold across products.
struct Corpus {
  SpacePtr p1, p2, p3;
  SpacePtr g0, g1, g2, g3;
  SpacePtr p1xp1, exe, p1xe;

  std::vector<std::pair<std::string, SpacePtr>> named() const;
};

/// corrupt_todd perturbs the Todd class of every leaf space by its (1,1)
/// generator (products inherit the damage). Test-only negative control.
Corpus make_corpus(bool corrupt_todd = false);

uint64_t mix_seed(uint64_t seed, std::string_view tag);

/// Deterministic rational with numerator in [-9, 9], denominator in [1, 3].
Rational random_rational(std::mt19937_64& rng);

HodgeClass random_class(const AlgebraPtr& ring, std::mt19937_64& rng);

/// Random class supported on the Hochschild-degree-zero part of the basis.
HodgeClass random_hh_zero_class(const AlgebraPtr& ring, std::mt19937_64& rng);

/// The fixed reproducible kernel catalog for a space pair: the identity when
/// the endpoints coincide, every degree-compatible rank-one basis kernel,
/// external line bundles O(a) x O(b) for a, b in [-1, 1] when both endpoints
/// carry a polarization, and five seeded random kernels.
std::vector<Kernel> kernel_catalog(const SpacePtr& x, const SpacePtr& y, uint64_t seed);

Kernel line_bundle_kernel(const SpacePtr& x, const SpacePtr& y, int a, int b);
Kernel random_kernel(const SpacePtr& x, const SpacePtr& y, uint64_t seed, int index);

}  // namespace mukai
