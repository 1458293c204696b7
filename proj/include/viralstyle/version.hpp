#pragma once

#include <string_view>

namespace viralstyle {

inline constexpr std::string_view kToolName = "viralstyle";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace viralstyle
