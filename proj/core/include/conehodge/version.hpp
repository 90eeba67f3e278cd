#pragma once

namespace conehodge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace conehodge
