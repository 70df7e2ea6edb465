#pragma once

namespace crosspart {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace crosspart
