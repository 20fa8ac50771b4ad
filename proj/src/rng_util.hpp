#pragma once

#include <cstdint>
#include <random>

namespace quest::detail {

// 53-bit uniform in [0, 1). Hand-rolled because the distribution adapters in
// <random> are not byte-identical across standard libraries, and seeded runs
// must reproduce exactly.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform01(gen) * static_cast<double>(n)) % n;
}

} // namespace quest::detail
