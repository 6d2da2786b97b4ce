#include "kakeya/binomial.hpp"

#include <array>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

using Table = std::array<std::array<std::uint64_t, kBinomialMaxN + 1>, kBinomialMaxN + 1>;

Table build_table() {
    Table t{};
    for (int n = 0; n <= kBinomialMaxN; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}

}  // namespace

std::uint64_t binomial_exact(int n, int k) {
    static const Table table = build_table();
    if (n < 0 || n > kBinomialMaxN)
        throw error(errc::invalid_input,
                    "binomial coefficients are exact only for 0 <= n <= 62");
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

double binomial(int n, int k) { return static_cast<double>(binomial_exact(n, k)); }

}  // namespace kakeya
