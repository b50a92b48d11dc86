#pragma once

#include <string_view>

namespace mukai {

inline constexpr std::string_view kEngineName = "mukai";
inline constexpr std::string_view kEngineVersion = "0.1.0";

}  // namespace mukai
