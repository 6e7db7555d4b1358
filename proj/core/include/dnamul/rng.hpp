#pragma once

#include <cstdint>
#include <random>

namespace dnamul {

/// All randomness flows through one seeded generator so every simulation is
/// replayable. mt19937_64 has a standardized sequence, which keeps outputs
/// identical across platforms.
using Rng = std::mt19937_64;

/// Uniform draw from [0, n). Unbiased via rejection of the short tail,
/// avoiding std::uniform_int_distribution whose mapping is
/// implementation-defined.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= min) return static_cast<std::size_t>(r % bound);
    }
}

}  // namespace dnamul
