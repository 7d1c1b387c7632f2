#pragma once

namespace affine {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace affine
