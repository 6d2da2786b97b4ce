#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "kakeya/poly.hpp"

namespace kakeya {

/// mt19937_64 seeded from (seed, salt...) through std::seed_seq; the same
/// inputs give the same stream everywhere, which is what makes sweeps and
/// root-finder starts reproducible.
inline std::mt19937_64 seeded_rng(std::uint64_t seed,
                                  std::initializer_list<std::uint32_t> salt = {}) {
    std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed & 0xffffffffu),
                                        static_cast<std::uint32_t>(seed >> 32)};
    for (std::uint32_t s : salt) words.push_back(s);
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Distribution classes are implementation-defined; this is not.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform point in the closed disc |z| <= radius (rejection from the square).
inline Cplx uniform_in_disc(std::mt19937_64& rng, double radius = 1.0) {
    for (;;) {
        const double x = 2.0 * uniform01(rng) - 1.0;
        const double y = 2.0 * uniform01(rng) - 1.0;
        if (x * x + y * y <= 1.0) return Cplx(radius * x, radius * y);
    }
}

}  // namespace kakeya
