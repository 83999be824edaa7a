#pragma once

#include <cstdint>

namespace ncsurf {

inline constexpr std::uint64_t default_seed = 20170721;

/// splitmix64 finalizer; derives independent per-trial seeds so that
/// parallel trials do not depend on scheduling.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

} // namespace ncsurf
