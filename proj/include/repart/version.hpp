#pragma once

#include <string_view>

namespace repart {

inline constexpr std::string_view kToolName = "repart";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace repart
