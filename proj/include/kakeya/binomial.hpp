#pragma once

#include <cstdint>

namespace kakeya {

/// Largest n for which C(n, k) is held exactly in the 64-bit integer table.
inline constexpr int kBinomialMaxN = 62;

/// Exact binomial coefficient. k outside [0, n] yields 0; n outside
/// [0, kBinomialMaxN] raises errc::invalid_input rather than silently
/// losing precision.
std::uint64_t binomial_exact(int n, int k);

/// binomial_exact converted to double.
double binomial(int n, int k);

}  // namespace kakeya
