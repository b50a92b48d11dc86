#pragma once

#include <mukai/characteristic.hpp>
#include <mukai/spaces.hpp>

#include <map>
#include <utility>
#include <vector>

namespace mukai {

/// Hochschild-homology class in the Hodge presentation. The degree-i
/// component collects the (form, coh) pieces with form - coh = i; the
/// regrading map is the identity on this representation.
struct HHClass {
  SpacePtr space;
  HodgeClass value;
};

HHClass make_hh(SpacePtr space, HodgeClass value);
HHClass basis_hh(const SpacePtr& space, int i);

/// Partition by Hochschild degree; the parts sum back to the input.
std::map<int, HodgeClass> hh_degree_split(const HHClass& x);

/// Degree of a homogeneous class; throws ShapeError when mixed.
int hh_degree_of(const HHClass& x);

/// integral( star(a) * b * td(T) ). Vanishes unless the degrees cancel.
Rational mukai_pairing(const HHClass& a, const HHClass& b);

/// integral( a * b * td(T) ). Vanishes unless the degrees cancel.
Rational shklyarov_pairing(const HHClass& a, const HHClass& b);

/// The Kunneth map, the identity on the tensor basis: a, b -> a x b.
HHClass kunneth(const HHClass& a, const HHClass& b, const SpacePtr& xy);

/// Canonical decomposition of a class on a product into sum of
/// (left class) x (right basis class) pairs; zero columns are skipped.
std::vector<std::pair<HodgeClass, HodgeClass>> kunneth_inverse(const HHClass& on_product);

/// Gram matrices of the two pairings over the full basis.
RationalMatrix mukai_gram(const SpacePtr& x);
RationalMatrix shklyarov_gram(const SpacePtr& x);

}  // namespace mukai
