#include "kakeya/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kakeya/bounds.hpp"
#include "kakeya/error.hpp"
#include "kakeya/random_util.hpp"

namespace kakeya {

namespace {

double residual_scale(const Poly& p, Cplx r, int deg) {
    return p.coeff_one_norm() * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(deg));
}

}  // namespace

RootResult find_roots(const Poly& p, double tol, int max_iters, std::uint64_t seed) {
    const auto degopt = p.degree();
    if (!degopt || *degopt < 1)
        throw error(errc::invalid_input, "find_roots requires degree >= 1");
    const int deg = *degopt;
    if (deg > kRootDegreeCap)
        throw error(errc::invalid_input, "degree above the hard cap of 64");
    if (!(tol > 0.0) || max_iters < 1)
        throw error(errc::invalid_input, "bad tolerance or iteration cap");

    // Exact roots at the origin come off first, so the iteration always works
    // on a polynomial with nonzero constant term.
    const auto& pc = p.coeffs();
    int zeros_at_origin = 0;
    while (pc[zeros_at_origin] == Cplx(0.0, 0.0)) ++zeros_at_origin;
    const Poly work(std::vector<Cplx>(pc.begin() + zeros_at_origin, pc.end()));
    const int d = deg - zeros_at_origin;

    std::vector<Cplx> x;
    int iters = 0;
    if (d >= 1) {
        // Circular start at half the inclusion radius, with angular jitter to
        // break symmetric stagnation. Deterministic given the seed.
        const double r0 = 0.5 * fujiwara_bound(work).fujiwara_radius;
        auto rng = seeded_rng(seed);
        x.resize(d);
        for (int i = 0; i < d; ++i) {
            const double frac = (static_cast<double>(i) + 0.25 + 0.5 * uniform01(rng)) /
                                static_cast<double>(d);
            x[i] = std::polar(r0, 2.0 * std::numbers::pi * frac);
        }

        const Poly dwork = work.derivative();
        std::vector<Cplx> step(d);
        for (; iters < max_iters;) {
            ++iters;
            double max_rel_resid = 0.0;
            for (int i = 0; i < d; ++i) {
                const Cplx pv = work(x[i]);
                max_rel_resid = std::max(
                    max_rel_resid, std::abs(pv) / std::max(residual_scale(work, x[i], d), 1e-300));
                if (pv == Cplx(0.0, 0.0)) {
                    step[i] = Cplx(0.0, 0.0);
                    continue;
                }
                const Cplx dv = dwork(x[i]);
                if (dv == Cplx(0.0, 0.0)) {
                    // stationary point that is not a root: kick deterministically
                    step[i] = Cplx(-0.01, -0.017) * (1.0 + std::abs(x[i]));
                    continue;
                }
                const Cplx ratio = pv / dv;
                Cplx repulsion(0.0, 0.0);
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    const Cplx diff = x[i] - x[j];
                    if (diff != Cplx(0.0, 0.0)) repulsion += Cplx(1.0, 0.0) / diff;
                }
                const Cplx denom = Cplx(1.0, 0.0) - ratio * repulsion;
                step[i] = std::abs(denom) < 1e-290 ? ratio : ratio / denom;
                if (!is_finite(step[i])) step[i] = ratio;
            }
            double max_step = 0.0;
            for (int i = 0; i < d; ++i) {
                x[i] -= step[i];
                max_step = std::max(max_step, std::abs(step[i]) / std::max(1.0, std::abs(x[i])));
            }
            if (max_step <= tol) break;
            // Clusters around multiple roots stall on step size long after the
            // residual has bottomed out.
            if (max_rel_resid <= 0.01 * kRootResidualTol) break;
        }
    }

    x.insert(x.end(), static_cast<std::size_t>(zeros_at_origin), Cplx(0.0, 0.0));
    std::sort(x.begin(), x.end(), [](Cplx a, Cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    RootResult res;
    res.roots = std::move(x);
    res.iterations = iters;
    double worst = 0.0;
    for (Cplx r : res.roots)
        worst = std::max(worst, std::abs(p(r)) / std::max(residual_scale(p, r, deg), 1e-300));
    res.max_residual = worst;
    res.converged = worst <= kRootResidualTol;
    return res;
}

std::pair<Cplx, double> min_modulus_root(const Poly& p, Cplx center) {
    require_finite(center, "center");
    const RootResult rr = find_roots(p);
    if (!rr.converged)
        throw error(errc::non_convergence,
                    "root finding did not converge; cannot select a nearest zero");
    Cplx best(0.0, 0.0);
    double best_dist = std::numeric_limits<double>::infinity();
    for (Cplx r : rr.roots) {
        const double dist = std::abs(r - center);
        if (dist < best_dist) {
            best_dist = dist;
            best = r;
        }
    }
    return {best, best_dist};
}

}  // namespace kakeya
