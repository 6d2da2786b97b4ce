#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kakeya/apolarity.hpp"
#include "kakeya/bounds.hpp"
#include "kakeya/construction.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/roots.hpp"

namespace kakeya {

struct PerturbationInfo {
    bool applied = false;
    double epsilon = 0.0;
    int moved = 0;  // how many selected zeros were shifted
};

/// Full certificate for one instance: k selected zeros of p inside the frame
/// disc imply a zero of p^(k-1) inside bound_disc, whose radius is
/// frame.radius * 2(n-k+1)/ln 2. theorem_holds records whether the nearest
/// computed zero of p^(k-1) actually landed inside (it must; a failure is an
/// implementation bug, not a counterexample).
struct KakeyaCertificate {
    int n = 0;
    int k = 0;
    Disc frame;
    NodeSet nodes;        // in the normalized (unit-disc) frame
    WitnessPoly witness;  // likewise
    Disc bound_disc;      // back in the original frame
    ApolarityReport apolarity;
    std::optional<Cplx> witness_zero;  // zero of p^(k-1) nearest the center
    std::optional<double> witness_distance;
    bool theorem_holds = false;
    std::string disc_comparison;  // how the boundary case is decided
    std::optional<PerturbationInfo> perturbation;
};

/// The generalized construction (target derivative order below k-1). No
/// closed-form radius is proven for it; the bound disc is the numerically
/// computed inclusion radius of the witness polynomial, and the report says
/// so in bound_kind.
struct GeneralizedCertificate {
    int n = 0;
    int k = 0;
    int target_index = 0;
    Disc frame;
    NodeSet nodes;
    WitnessPoly witness;
    BoundReport bound;  // fujiwara report of the witness
    Disc bound_disc;
    ApolarityReport apolarity;
    std::optional<Cplx> witness_zero;  // zero of p^(target_index)
    std::optional<double> witness_distance;
    bool holds = false;
    std::string bound_kind;
};

struct SweepRecord {
    int n = 0;
    int k = 0;
    int samples = 0;
    double max_tightness = 0.0;   // max witness_distance / bound radius
    double mean_tightness = 0.0;
    int failures = 0;
    std::string first_failure;  // JSON reproducer; empty on a clean cell
};

/// Certify that a zero of p^(k-1) lies in the scaled bound disc, where the
/// selected zeros of p (k of them, pairwise distinct) lie in the frame disc.
/// k = 1 is accepted and degenerates to p itself containing its selected
/// zero. Coincident selections are rejected here and belong to
/// certify_with_perturbation.
KakeyaCertificate certify(const Poly& p, std::span<const Cplx> selected_zeros,
                          const Disc& frame);

/// As certify, but coincident selected zeros are first shifted toward the
/// frame center by distinct multiples of epsilon (keeping them inside the
/// closed disc), and p is rebuilt from its perturbed full root multiset.
/// Distinct selections pass through untouched.
KakeyaCertificate certify_with_perturbation(const Poly& p,
                                            std::span<const Cplx> selected_zeros,
                                            const Disc& frame, double epsilon);

GeneralizedCertificate generalized_certify(const Poly& p,
                                           std::span<const Cplx> selected_zeros,
                                           const Disc& frame, int target_index);

/// Monte-Carlo tightness sweep over the (n, k) grid; k_hi <= 0 means "up to
/// n" per cell. Nodes are drawn uniformly from the closed unit disc, the
/// remaining roots uniformly from |z| <= 10. Deterministic given seed:
/// per-sample generators are derived from (seed, n, k, index), so the output
/// is bit-identical regardless of the worker count.
std::vector<SweepRecord> sweep(int n_lo, int n_hi, int k_lo, int k_hi,
                               int samples_per_cell, std::uint64_t seed,
                               int threads = 1);

/// CSV rendering (17 significant digits, one row per non-empty cell).
std::string sweep_csv(const std::vector<SweepRecord>& records);

}  // namespace kakeya
