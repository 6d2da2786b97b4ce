#pragma once

#include <span>
#include <vector>

#include "kakeya/apolarity.hpp"
#include "kakeya/poly.hpp"

namespace kakeya {

/// Nodes closer than this are rejected outright.
inline constexpr double kNodeSeparationFloor = 1e-12;
/// Relative residual gate on the defining weight system.
inline constexpr double kWeightSystemRelTol = 1e-8;

/// k pairwise distinct points in the closed unit disc together with the
/// weights solving
///
///   sum_i a_i z_i^m = delta(m, target_index),   0 <= m <= k-1.
///
/// target_index = k-1 is the configuration the closed-form radius is proved
/// for; smaller targets are the generalized construction and carry only an
/// empirically computed bound.
struct NodeSet {
    std::vector<Cplx> nodes;
    std::vector<Cplx> weights;
    int target_index = 0;
    double pairwise_min_separation = 0.0;  // +inf when k == 1
    bool conditioning_warning = false;     // separation below 0.05/k

    int k() const { return static_cast<int>(nodes.size()); }
};

/// Weighted power sums S_m = sum_i a_i z_i^m for m = 0..M.
/// By construction S_m = delta(m, target_index) for m <= k-1, and for
/// target_index = k-1 the values obey |S_m| <= alpha^(m-k+1).
struct PowerSums {
    std::vector<Cplx> values;
    int k = 0;
    int target_index = 0;
    double alpha = 0.0;
};

/// The combination t(z) = sum_i a_i (z - z_i)^n, expanded as
/// t_i = (-1)^(n-i) C(n,i) S_(n-i). Degree n - target_index, so n-k+1
/// for the default target.
struct WitnessPoly {
    Poly t;
    int n = 0;
    int k = 0;
    NodeSet source;
};

struct SBoundReport {
    double worst_ratio = 0.0;  // max over m of |S_m| / alpha^(m-k+1)
    int argmax_m = 0;
};

/// alpha(k) = 1 / (2^(1/k) - 1), the base of the geometric power-sum bound.
/// Satisfies (1 + alpha)^k = 2 alpha^k and alpha < k / ln 2.
double alpha(int k);

/// Solve the defining weight system. For target_index = k-1 this uses the
/// closed form a_i = 1/q'(z_i) with q(z) = prod (z - z_j) (the leading
/// Lagrange coefficients); other targets go through the direct linear solve.
/// The computed weights are gated on the system residual before returning.
NodeSet solve_weights(std::span<const Cplx> nodes, int target_index);

/// Direct transposed-Vandermonde solve in extended precision; the oracle for
/// the closed form and the only path for general target_index. The optional
/// output receives a rough pivot-ratio conditioning figure.
std::vector<Cplx> solve_weights_direct(std::span<const Cplx> nodes, int target_index,
                                       double* condition_estimate = nullptr);

/// S_m by direct summation with running node powers.
PowerSums power_sums_direct(const NodeSet& ns, int upto);

/// S_m seeded with the Kronecker deltas and extended through the linear
/// recurrence S_m = -(c_{k-1} S_{m-1} + ... + c_0 S_{m-k}), c_i the
/// coefficients of q. This is the default path.
PowerSums power_sums_recurrence(const NodeSet& ns, int upto);

/// Worst ratio |S_m| / alpha^(m-k+1) over the stored values. The bound is a
/// theorem for target_index = k-1; a ratio beyond 1 + 1e-6 is reported as a
/// hard internal failure.
SBoundReport check_s_bound(const PowerSums& ps);

/// Build t(z) for a degree-n ambient polynomial, n >= k. The coefficient
/// form is cross-checked against the defining combination at a few points
/// before returning.
WitnessPoly build_witness(const NodeSet& ns, int n);

/// Check that p (degree n, vanishing at every node) is weakly apolar to the
/// witness: returns the report of the form at index n, and verifies the
/// derivative-reduction chain that makes (p^(target), t) a proper apolar
/// pair at index degree(t).
ApolarityReport weak_apolarity_of_construction(const Poly& p, const NodeSet& ns,
                                               const WitnessPoly& w);

}  // namespace kakeya
