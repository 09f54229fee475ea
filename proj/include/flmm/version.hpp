#pragma once

namespace flmm {

inline constexpr const char* kVersion = "flmm 1.0.0";

}  // namespace flmm
