#pragma once

namespace vnauq {

inline constexpr const char* kToolName = "vnauq";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace vnauq
