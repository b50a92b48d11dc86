#pragma once

#include <mukai/characteristic.hpp>
#include <mukai/transforms.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>

namespace mukai {

/// {"basis name": "p/q"} over the nonzero coefficients.
nlohmann::json class_to_json(const HodgeClass& x);
HodgeClass class_from_json(const nlohmann::json& j, const AlgebraPtr& ring);

/// {"kind": "projective", "n": 2} | {"kind": "curve", "genus": 1}
/// | {"kind": "product", "factors": [...]} | {"kind": "point"}
SpacePtr space_from_spec(const nlohmann::json& j);
SpacePtr space_from_spec_text(const std::string& text);

/// {"kind": "line", "twist": d} | {"kind": "tangent"}
/// | {"kind": "sum" | "tensor", "parts": [...]}
BundleData bundle_from_spec(const nlohmann::json& j, const SpacePtr& x);

/// {"kind": "identity"} | {"kind": "rank_one", "left": class, "right": class}
/// | {"kind": "line_bundle", "a": int, "b": int} | {"kind": "random", "seed"?}
Kernel kernel_from_spec(const nlohmann::json& j, const SpacePtr& x, const SpacePtr& y,
                        uint64_t default_seed);

nlohmann::json matrix_to_json(const RationalMatrix& m);
std::string format_matrix(const RationalMatrix& m);

nlohmann::json parse_json(const std::string& text);

}  // namespace mukai
