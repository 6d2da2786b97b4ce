#include "kakeya/construction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "kakeya/binomial.hpp"
#include "kakeya/error.hpp"
#include "kakeya/random_util.hpp"

namespace kakeya {

namespace {

constexpr double kUnitDiscSlack = 1e-12;

double min_pairwise_separation(std::span<const Cplx> pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

void validate_nodes(std::span<const Cplx> nodes, int target_index) {
    if (nodes.empty()) throw error(errc::invalid_input, "node set must be nonempty");
    const int k = static_cast<int>(nodes.size());
    if (target_index < 0 || target_index >= k)
        throw error(errc::invalid_input, "target_index must lie in [0, k-1]");
    for (Cplx z : nodes) {
        require_finite(z, "node");
        if (std::abs(z) > 1.0 + kUnitDiscSlack)
            throw error(errc::frame_violation,
                        "node outside the closed unit disc; normalize the frame first");
    }
}

// Transposed-Vandermonde solve with partial pivoting, carried out in
// long double to keep the oracle well clear of the 1e-6 agreement gate.
std::vector<Cplx> vandermonde_solve(std::span<const Cplx> nodes, int target_index,
                                    double* cond_out) {
    using CL = std::complex<long double>;
    const int k = static_cast<int>(nodes.size());
    std::vector<std::vector<CL>> a(k, std::vector<CL>(k + 1, CL(0.0L)));
    for (int i = 0; i < k; ++i) a[0][i] = CL(1.0L);
    for (int m = 1; m < k; ++m)
        for (int i = 0; i < k; ++i)
            a[m][i] = a[m - 1][i] * CL(nodes[i].real(), nodes[i].imag());
    for (int m = 0; m < k; ++m) a[m][k] = (m == target_index) ? CL(1.0L) : CL(0.0L);

    long double piv_max = 0.0L;
    long double piv_min = std::numeric_limits<long double>::infinity();
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        const long double pmag = std::abs(a[col][col]);
        piv_max = std::max(piv_max, pmag);
        piv_min = std::min(piv_min, pmag);
        if (pmag == 0.0L) {
            if (cond_out) *cond_out = std::numeric_limits<double>::infinity();
            throw ill_conditioned_error("weight system is singular to working precision",
                                        std::numeric_limits<double>::infinity());
        }
        for (int r = col + 1; r < k; ++r) {
            const CL f = a[r][col] / a[col][col];
            for (int cc = col; cc <= k; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    std::vector<CL> x(k);
    for (int r = k - 1; r >= 0; --r) {
        CL s = a[r][k];
        for (int cc = r + 1; cc < k; ++cc) s -= a[r][cc] * x[cc];
        x[r] = s / a[r][r];
    }
    if (cond_out)
        *cond_out = piv_min > 0.0L ? static_cast<double>(piv_max / piv_min)
                                   : std::numeric_limits<double>::infinity();
    std::vector<Cplx> out(k);
    for (int i = 0; i < k; ++i)
        out[i] = Cplx(static_cast<double>(x[i].real()), static_cast<double>(x[i].imag()));
    return out;
}

PowerSums power_sums_header(const NodeSet& ns, int upto) {
    if (upto < ns.k() - 1)
        throw error(errc::invalid_input, "power sums need upto >= k-1");
    PowerSums ps;
    ps.k = ns.k();
    ps.target_index = ns.target_index;
    ps.alpha = alpha(ns.k());
    ps.values.assign(static_cast<std::size_t>(upto) + 1, Cplx(0.0, 0.0));
    return ps;
}

}  // namespace

double alpha(int k) {
    if (k < 1) throw error(errc::invalid_input, "alpha requires k >= 1");
    // 2^(1/k) - 1 through expm1 to keep full precision for large k.
    return 1.0 / std::expm1(std::numbers::ln2 / static_cast<double>(k));
}

NodeSet solve_weights(std::span<const Cplx> nodes, int target_index) {
    validate_nodes(nodes, target_index);
    const int k = static_cast<int>(nodes.size());

    NodeSet ns;
    ns.nodes.assign(nodes.begin(), nodes.end());
    ns.target_index = target_index;
    ns.pairwise_min_separation = min_pairwise_separation(nodes);
    if (ns.pairwise_min_separation < kNodeSeparationFloor)
        throw error(errc::degenerate_nodes,
                    "nodes are closer than the 1e-12 separation floor");
    ns.conditioning_warning = ns.pairwise_min_separation < 0.05 / static_cast<double>(k);

    double cond = 0.0;
    if (target_index == k - 1) {
        // Closed form: a_i = 1/q'(z_i) with q(z) = prod (z - z_j), i.e. the
        // leading Lagrange coefficients. This is exactly the solution of the
        // delta system and stays stable where the Vandermonde solve does not.
        ns.weights.resize(k);
        for (int i = 0; i < k; ++i) {
            Cplx prod(1.0, 0.0);
            for (int j = 0; j < k; ++j)
                if (j != i) prod *= nodes[i] - nodes[j];
            ns.weights[i] = Cplx(1.0, 0.0) / prod;
        }
    } else {
        ns.weights = vandermonde_solve(nodes, target_index, &cond);
    }

    // Gate on the defining system before anything downstream trusts the
    // weights. Scale-relative: clustered nodes legitimately have huge a_i.
    double wsum = 0.0;
    for (Cplx w : ns.weights) wsum += std::abs(w);
    const double tol = kWeightSystemRelTol * std::max(1.0, wsum);
    std::vector<Cplx> pw(k, Cplx(1.0, 0.0));
    for (int m = 0; m < k; ++m) {
        Cplx s(0.0, 0.0);
        for (int i = 0; i < k; ++i) s += ns.weights[i] * pw[i];
        if (m == target_index) s -= Cplx(1.0, 0.0);
        if (std::abs(s) > tol)
            throw ill_conditioned_error("weight system residual exceeds tolerance",
                                        std::max(cond, wsum));
        for (int i = 0; i < k; ++i) pw[i] *= nodes[i];
    }
    return ns;
}

std::vector<Cplx> solve_weights_direct(std::span<const Cplx> nodes, int target_index,
                                       double* condition_estimate) {
    validate_nodes(nodes, target_index);
    if (min_pairwise_separation(nodes) < kNodeSeparationFloor)
        throw error(errc::degenerate_nodes,
                    "nodes are closer than the 1e-12 separation floor");
    return vandermonde_solve(nodes, target_index, condition_estimate);
}

PowerSums power_sums_direct(const NodeSet& ns, int upto) {
    PowerSums ps = power_sums_header(ns, upto);
    const int k = ns.k();
    std::vector<Cplx> pw(k, Cplx(1.0, 0.0));
    for (int m = 0; m <= upto; ++m) {
        Cplx s(0.0, 0.0);
        for (int i = 0; i < k; ++i) s += ns.weights[i] * pw[i];
        ps.values[m] = s;
        for (int i = 0; i < k; ++i) pw[i] *= ns.nodes[i];
    }
    return ps;
}

PowerSums power_sums_recurrence(const NodeSet& ns, int upto) {
    PowerSums ps = power_sums_header(ns, upto);
    const int k = ns.k();
    for (int m = 0; m < k && m <= upto; ++m)
        ps.values[m] = (m == ns.target_index) ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0);
    if (upto < k) return ps;
    const Poly q = Poly::from_roots(ns.nodes);
    const auto& c = q.coeffs();  // monic, c[k] == 1
    for (int m = k; m <= upto; ++m) {
        Cplx s(0.0, 0.0);
        for (int j = 0; j < k; ++j) s += c[j] * ps.values[m - k + j];
        ps.values[m] = -s;
    }
    return ps;
}

SBoundReport check_s_bound(const PowerSums& ps) {
    if (ps.target_index != ps.k - 1)
        throw error(errc::invalid_input,
                    "the geometric power-sum bound applies to target_index == k-1 only");
    SBoundReport rep;
    // envelope alpha^(m-k+1), updated multiplicatively
    double env = std::pow(ps.alpha, static_cast<double>(-(ps.k - 1)));
    for (int m = 0; m < static_cast<int>(ps.values.size()); ++m) {
        const double ratio = std::isinf(env) ? 0.0 : std::abs(ps.values[m]) / env;
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.argmax_m = m;
        }
        env *= ps.alpha;
    }
    if (rep.worst_ratio > 1.0 + 1e-6)
        throw error(errc::internal_check_failed,
                    "power-sum bound exceeded beyond rounding slack");
    return rep;
}

WitnessPoly build_witness(const NodeSet& ns, int n) {
    const int k = ns.k();
    if (n < k) throw error(errc::invalid_input, "build_witness requires n >= k");
    const int deg_t = n - ns.target_index;
    const PowerSums ps = power_sums_recurrence(ns, n);

    std::vector<Cplx> t(static_cast<std::size_t>(deg_t) + 1);
    for (int i = 0; i <= deg_t; ++i) {
        const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
        t[i] = sign * binomial(n, i) * ps.values[n - i];
    }

    WitnessPoly w;
    w.t = Poly(std::move(t));
    w.n = n;
    w.k = k;
    w.source = ns;
    if (!w.t.degree() || *w.t.degree() != deg_t)
        throw error(errc::internal_check_failed,
                    "witness polynomial lost its leading coefficient");

    // Cross-check the coefficient form against the defining combination
    // sum_i a_i (z - z_i)^n at a handful of fixed pseudo-random points
    // outside the node disc.
    auto rng = seeded_rng(0x5712c8a1u);
    for (int probe = 0; probe < 5; ++probe) {
        const Cplx z = std::polar(1.25 + uniform01(rng),
                                  2.0 * std::numbers::pi * uniform01(rng));
        Cplx direct(0.0, 0.0);
        double scale = 0.0;
        for (int i = 0; i < k; ++i) {
            const Cplx d = z - ns.nodes[i];
            Cplx pw(1.0, 0.0);
            for (int e = 0; e < n; ++e) pw *= d;
            direct += ns.weights[i] * pw;
            scale += std::abs(ns.weights[i]) * std::pow(std::abs(d), static_cast<double>(n));
        }
        if (std::abs(w.t(z) - direct) > 1e-8 * std::max(scale, 1e-300))
            throw error(errc::internal_check_failed,
                        "witness polynomial failed its two-form cross-check");
    }
    return w;
}

ApolarityReport weak_apolarity_of_construction(const Poly& p, const NodeSet& ns,
                                               const WitnessPoly& w) {
    const auto deg = p.degree();
    if (!deg || *deg != w.n)
        throw error(errc::invalid_input, "polynomial degree must equal the witness index n");
    constexpr double kNodeRootRelTol = 1e-8;
    for (Cplx z : ns.nodes) {
        const double scale = p.eval_magnitude(std::abs(z));
        const double resid = std::abs(p(z)) / std::max(scale, 1e-300);
        if (resid > kNodeRootRelTol) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "a node is not a zero of the polynomial to working precision "
                          "(relative residual %.2e; input rounding may be amplified by "
                          "frame normalization)",
                          resid);
            throw error(errc::inconsistent_input, msg);
        }
    }

    const ApolarityReport rep = apolar_operator(p, w.t, w.n, 1e-8);

    // The derivative reduction is exact algebra; a large residual here means
    // the construction is broken, not the input.
    if (derivative_identity_residual(p, w.t) > 1e-10)
        throw error(errc::internal_check_failed,
                    "derivative apolarity identity residual above 1e-10");
    const int m = *w.t.degree();
    const ApolarityReport chain = apolar_operator(p.derivative(w.n - m), w.t, m, 1e-8);
    if (rep.apolar && !chain.apolar)
        throw error(errc::internal_check_failed,
                    "derivative pair failed apolarity while the base pair passed");
    return rep;
}

}  // namespace kakeya
