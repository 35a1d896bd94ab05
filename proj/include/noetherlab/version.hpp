#pragma once

namespace nlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nlab
