#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace affine {

// Shortest round-trip decimal formatting. Used for every numeric value we
// serialize, so outputs are byte-stable across runs and thread counts.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace affine
