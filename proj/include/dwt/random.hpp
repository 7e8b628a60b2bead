#pragma once

#include <cstdint>

// Counter-based random streams: the value for (seed, stream, index) is a pure
// function of its arguments, so Monte Carlo results do not depend on how the
// work is split across threads.

namespace dwt::random {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

/// Uniform on [0, 1) with 53 random bits.
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
    return to_unit_interval(counter_hash(seed, stream, index));
}

}  // namespace dwt::random
