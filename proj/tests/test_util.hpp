#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "kakeya/poly.hpp"
#include "kakeya/random_util.hpp"

namespace kakeya::test {

inline bool close(Cplx a, Cplx b, double tol) { return std::abs(a - b) <= tol; }

inline double rel_diff(Cplx a, Cplx b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

inline Cplx random_unit_square(std::mt19937_64& rng) {
    return Cplx(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
}

inline Poly random_poly(std::mt19937_64& rng, int degree) {
    std::vector<Cplx> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = random_unit_square(rng);
    while (std::abs(c.back()) < 1e-3) c.back() = random_unit_square(rng);
    return Poly(std::move(c));
}

// k points in the closed unit disc with pairwise separation at least min_sep.
inline std::vector<Cplx> random_nodes(std::mt19937_64& rng, int k, double min_sep) {
    std::vector<Cplx> nodes;
    for (;;) {
        nodes.clear();
        for (int i = 0; i < k; ++i) nodes.push_back(uniform_in_disc(rng));
        bool ok = true;
        for (std::size_t i = 0; i < nodes.size() && ok; ++i)
            for (std::size_t j = i + 1; j < nodes.size() && ok; ++j)
                if (std::abs(nodes[i] - nodes[j]) < min_sep) ok = false;
        if (ok) return nodes;
    }
}

}  // namespace kakeya::test
