#pragma once

namespace quadswan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quadswan
