#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kakeya/poly.hpp"

namespace kakeya {

inline constexpr int kRootDegreeCap = 64;
inline constexpr double kRootStepTol = 1e-12;
inline constexpr double kRootResidualTol = 1e-9;
inline constexpr int kRootMaxIters = 200;
inline constexpr std::uint64_t kRootDefaultSeed = 0x9e3779b97f4a7c15ull;

/// roots holds exactly degree(p) values (multiple roots appear as numerical
/// clusters), sorted by (re, im). converged guarantees
/// max_residual <= kRootResidualTol, where the residual of a root r is
/// |p(r)| / (sum|coeff| * max(1,|r|)^degree).
struct RootResult {
    std::vector<Cplx> roots;
    double max_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Simultaneous Ehrlich-Aberth iteration from a jittered circular start of
/// radius fujiwara_bound/2. Exact zero roots are deflated first. Pure given
/// (p, seed); never returns a silent wrong answer -- a result that misses
/// the residual gate comes back with converged = false.
RootResult find_roots(const Poly& p, double tol = kRootStepTol,
                      int max_iters = kRootMaxIters,
                      std::uint64_t seed = kRootDefaultSeed);

/// The root minimizing |root - center| and that distance. Raises
/// errc::non_convergence if find_roots does not converge.
std::pair<Cplx, double> min_modulus_root(const Poly& p, Cplx center);

}  // namespace kakeya
