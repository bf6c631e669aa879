#pragma once

#include <cstdint>
#include <random>

namespace canonram {

/// The library's only pseudo-random stream. std::mt19937_64 has a fully
/// specified output sequence, so seeds are portable across platforms.
using Rng = std::mt19937_64;

/// Version tag of the sampling conventions below (engine, 53-bit uniforms,
/// lexicographic pair order). Bump when any of them changes.
inline constexpr int kStreamVersion = 1;

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Bernoulli(p) from one engine draw; p <= 0 never fires and p >= 1 always does.
inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

/// Unbiased integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

/// SplitMix64 finaliser; used to derive independent seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive combination of seed components.
constexpr std::uint64_t combine_seed(std::uint64_t acc, std::uint64_t value) noexcept {
    return mix64(acc ^ mix64(value));
}

}  // namespace canonram
