#include "kakeya/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/random_util.hpp"
#include "kakeya/serialize.hpp"

namespace kakeya {

namespace {

constexpr double kFrameRelTol = 1e-10;
constexpr double kHoldRelSlack = 1e-8;
constexpr double kNodeRootRelTol = 1e-8;
constexpr const char* kDiscComparison = "closed disc with relative slack 1e-8";

double min_separation(std::span<const Cplx> pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

// Map the selected zeros into unit-disc coordinates. Points inside the
// 1e-10 tolerance band around the boundary are snapped onto it so the
// stricter NodeSet invariant holds downstream.
std::vector<Cplx> normalize_into_frame(std::span<const Cplx> pts, const Disc& frame) {
    std::vector<Cplx> w(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        require_finite(pts[i], "selected zero");
        const Cplx u = (pts[i] - frame.center) / frame.radius;
        const double r = std::abs(u);
        if (r > 1.0 + kFrameRelTol)
            throw error(errc::frame_violation, "selected zero lies outside the frame disc");
        w[i] = r > 1.0 ? u / r : u;
    }
    return w;
}

void validate_frame(const Disc& frame) {
    require_finite(frame.center, "frame center");
    if (!(frame.radius > 0.0) || !std::isfinite(frame.radius))
        throw error(errc::invalid_input, "frame disc must have positive finite radius");
}

}  // namespace

KakeyaCertificate certify(const Poly& p, std::span<const Cplx> selected, const Disc& frame) {
    const auto degopt = p.degree();
    if (!degopt || *degopt < 1) throw error(errc::invalid_input, "certify requires degree >= 1");
    validate_frame(frame);
    const int n = *degopt;
    const int k = static_cast<int>(selected.size());
    if (k < 1) throw error(errc::invalid_input, "select at least one zero");
    if (k > n) throw error(errc::invalid_input, "cannot select more zeros than the degree");

    const std::vector<Cplx> nodes_w = normalize_into_frame(selected, frame);
    NodeSet ns;
    try {
        ns = solve_weights(nodes_w, k - 1);
    } catch (const error& e) {
        if (e.kind() == errc::degenerate_nodes)
            throw error(errc::degenerate_nodes,
                        std::string(e.what()) + " (coincident zeros go through certify_with_perturbation)");
        throw;
    }

    const Poly p_norm = p.affine_substitute(frame.center, frame.radius);
    WitnessPoly wit = build_witness(ns, n);
    const ApolarityReport rep = weak_apolarity_of_construction(p_norm, ns, wit);
    if (!rep.apolar)
        throw error(errc::internal_check_failed,
                    "apolarity gate failed; the certificate is not licensed");

    KakeyaCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.frame = frame;
    cert.nodes = std::move(ns);
    cert.witness = std::move(wit);
    cert.apolarity = rep;
    cert.bound_disc = bound_disc_for_general_frame(frame, n, k);

    const Poly deriv = p.derivative(k - 1);
    const auto [zero, dist] = min_modulus_root(deriv, frame.center);
    cert.witness_zero = zero;
    cert.witness_distance = dist;
    cert.theorem_holds = dist <= cert.bound_disc.radius * (1.0 + kHoldRelSlack);
    cert.disc_comparison = kDiscComparison;
    return cert;
}

KakeyaCertificate certify_with_perturbation(const Poly& p, std::span<const Cplx> selected,
                                            const Disc& frame, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1e-6)
        throw error(errc::invalid_input, "perturbation epsilon must lie in (0, 1e-6]");
    validate_frame(frame);
    const int k = static_cast<int>(selected.size());
    if (k < 1) throw error(errc::invalid_input, "select at least one zero");

    std::vector<Cplx> w = normalize_into_frame(selected, frame);

    // Cluster everything closer than eps/4 (transitively). Members of a
    // cluster then step toward the frame center by distinct multiples of
    // epsilon, which keeps them inside the closed unit disc.
    const double cluster_tol = epsilon / 4.0;
    std::vector<int> group(k, -1);
    int ngroups = 0;
    for (int i = 0; i < k; ++i) {
        if (group[i] >= 0) continue;
        group[i] = ngroups;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < k; ++a) {
                if (group[a] != ngroups) continue;
                for (int b = 0; b < k; ++b) {
                    if (group[b] >= 0) continue;
                    if (std::abs(w[a] - w[b]) < cluster_tol) {
                        group[b] = ngroups;
                        grew = true;
                    }
                }
            }
        }
        ++ngroups;
    }

    int moved_count = 0;
    for (int g = 0; g < ngroups; ++g) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
            if (group[i] == g) members.push_back(i);
        if (members.size() < 2) continue;
        const Cplx anchor = w[members.front()];
        const double an = std::abs(anchor);
        const Cplx dir = an > 1e-300 ? -anchor / an : Cplx(1.0, 0.0);
        for (std::size_t j = 0; j < members.size(); ++j) {
            w[members[j]] += static_cast<double>(j + 1) * epsilon * dir;
            ++moved_count;
        }
    }

    if (moved_count == 0) {
        KakeyaCertificate cert = certify(p, selected, frame);
        cert.perturbation = PerturbationInfo{false, epsilon, 0};
        return cert;
    }

    if (min_separation(w) < epsilon / 10.0)
        throw error(errc::degenerate_configuration,
                    "perturbation could not separate the selected zeros");

    // Every selected point must really be a zero of p before it is replaced.
    for (Cplx z : selected) {
        const double scale = p.eval_magnitude(std::abs(z));
        if (std::abs(p(z)) > kNodeRootRelTol * std::max(scale, 1e-300))
            throw error(errc::inconsistent_input, "a selected point is not a zero of the polynomial");
    }

    // Rebuild p on the perturbed full root multiset.
    const RootResult rr = find_roots(p);
    if (!rr.converged)
        throw error(errc::non_convergence, "root finding failed while rebuilding the polynomial");
    std::vector<Cplx> all_roots = rr.roots;
    std::vector<bool> used(all_roots.size(), false);
    std::vector<Cplx> new_selected(k);
    for (int i = 0; i < k; ++i) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < all_roots.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(all_roots[j] - selected[i]);
            if (dist < best_dist) {
                best_dist = dist;
                best = static_cast<int>(j);
            }
        }
        if (best < 0)
            throw error(errc::inconsistent_input, "more selected zeros than available roots");
        used[best] = true;
        const Cplx z_new = frame.center + frame.radius * w[i];
        all_roots[best] = z_new;
        new_selected[i] = z_new;
    }
    const Poly rebuilt = p.leading() * Poly::from_roots(all_roots);

    KakeyaCertificate cert = certify(rebuilt, new_selected, frame);
    cert.perturbation = PerturbationInfo{true, epsilon, moved_count};
    return cert;
}

GeneralizedCertificate generalized_certify(const Poly& p, std::span<const Cplx> selected,
                                           const Disc& frame, int target_index) {
    const auto degopt = p.degree();
    if (!degopt || *degopt < 1)
        throw error(errc::invalid_input, "generalized_certify requires degree >= 1");
    validate_frame(frame);
    const int n = *degopt;
    const int k = static_cast<int>(selected.size());
    if (k < 2) throw error(errc::invalid_input, "generalized certification needs k >= 2");
    if (k > n) throw error(errc::invalid_input, "cannot select more zeros than the degree");
    if (target_index < 1 || target_index > k - 1)
        throw error(errc::invalid_input, "target derivative order must lie in [1, k-1]");

    const std::vector<Cplx> nodes_w = normalize_into_frame(selected, frame);
    NodeSet ns = solve_weights(nodes_w, target_index);
    const Poly p_norm = p.affine_substitute(frame.center, frame.radius);
    WitnessPoly wit = build_witness(ns, n);
    const ApolarityReport rep = weak_apolarity_of_construction(p_norm, ns, wit);
    if (!rep.apolar)
        throw error(errc::internal_check_failed,
                    "apolarity gate failed; the certificate is not licensed");

    GeneralizedCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.target_index = target_index;
    cert.frame = frame;
    cert.bound = fujiwara_bound(wit.t);
    cert.bound_disc = Disc{frame.center, frame.radius * cert.bound.fujiwara_radius};
    cert.nodes = std::move(ns);
    cert.witness = std::move(wit);
    cert.apolarity = rep;

    const Poly deriv = p.derivative(target_index);
    const auto [zero, dist] = min_modulus_root(deriv, frame.center);
    cert.witness_zero = zero;
    cert.witness_distance = dist;
    // Empirical bound: allow root-finder noise an absolute sliver on top of
    // the relative slack, since the inclusion radius may legitimately be 0
    // for symmetric configurations.
    cert.holds = dist <= cert.bound_disc.radius * (1.0 + kHoldRelSlack) + 1e-10 * frame.radius;
    cert.bound_kind = "fujiwara radius of the witness (empirical; no proven closed-form radius)";
    return cert;
}

namespace {

struct SampleOutcome {
    bool completed = false;
    bool holds = false;
    double tightness = 0.0;
    std::string failure;  // nonempty on a failed or aborted sample
};

SampleOutcome run_sample(int n, int k, std::uint64_t seed, int index) {
    auto rng = seeded_rng(seed, {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                                 static_cast<std::uint32_t>(index)});
    SampleOutcome out;
    std::vector<Cplx> nodes;
    std::vector<Cplx> roots;
    try {
        for (int attempt = 0;; ++attempt) {
            nodes.clear();
            for (int i = 0; i < k; ++i) nodes.push_back(uniform_in_disc(rng));
            if (k == 1 || min_separation(nodes) >= 1e-9) break;
            if (attempt > 200)
                throw error(errc::degenerate_configuration, "node sampling kept colliding");
        }
        roots = nodes;
        for (int i = k; i < n; ++i) roots.push_back(uniform_in_disc(rng, 10.0));
        const Poly p = Poly::from_roots(roots);
        const KakeyaCertificate cert = certify(p, nodes, Disc{});
        out.completed = true;
        out.holds = cert.theorem_holds;
        out.tightness = *cert.witness_distance / cert.bound_disc.radius;
        if (!cert.theorem_holds) {
            nlohmann::json repro{{"n", n},
                                 {"k", k},
                                 {"sample", index},
                                 {"seed", seed},
                                 {"polynomial", p},
                                 {"nodes", nodes},
                                 {"witness_distance", *cert.witness_distance},
                                 {"bound_radius", cert.bound_disc.radius}};
            out.failure = repro.dump();
        }
    } catch (const std::exception& e) {
        nlohmann::json repro{{"n", n}, {"k", k}, {"sample", index}, {"seed", seed},
                             {"exception", e.what()}};
        if (!roots.empty()) repro["roots"] = roots;
        out.failure = repro.dump();
    }
    return out;
}

}  // namespace

std::vector<SweepRecord> sweep(int n_lo, int n_hi, int k_lo, int k_hi, int samples_per_cell,
                               std::uint64_t seed, int threads) {
    if (n_lo < 2 || n_hi < n_lo) throw error(errc::invalid_input, "bad n range");
    if (k_lo < 2) throw error(errc::invalid_input, "sweep cells need k >= 2");
    if (samples_per_cell < 0) throw error(errc::invalid_input, "samples must be nonnegative");
    if (threads < 1) threads = 1;

    std::vector<SweepRecord> records;
    for (int n = n_lo; n <= n_hi; ++n) {
        const int khi = k_hi <= 0 ? n : std::min(k_hi, n);
        for (int k = k_lo; k <= khi; ++k) {
            SweepRecord rec;
            rec.n = n;
            rec.k = k;
            rec.samples = samples_per_cell;

            std::vector<SampleOutcome> outcomes(samples_per_cell);
            auto worker = [&](int lo, int hi) {
                for (int i = lo; i < hi; ++i) outcomes[i] = run_sample(n, k, seed, i);
            };
            if (threads == 1 || samples_per_cell < 2) {
                worker(0, samples_per_cell);
            } else {
                const int nt = std::min(threads, samples_per_cell);
                const int chunk = (samples_per_cell + nt - 1) / nt;
                std::vector<std::thread> pool;
                for (int t = 0; t < nt; ++t)
                    pool.emplace_back(worker, t * chunk,
                                      std::min(samples_per_cell, (t + 1) * chunk));
                for (auto& th : pool) th.join();
            }

            // Reduce in sample-index order so the aggregate is identical no
            // matter how the work was split.
            double mx = 0.0;
            double sum = 0.0;
            int completed = 0;
            for (const auto& o : outcomes) {
                if (o.completed) {
                    mx = std::max(mx, o.tightness);
                    sum += o.tightness;
                    ++completed;
                }
                if (!o.failure.empty()) {
                    ++rec.failures;
                    if (rec.first_failure.empty()) rec.first_failure = o.failure;
                }
            }
            rec.max_tightness = mx;
            rec.mean_tightness = completed > 0 ? sum / completed : 0.0;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = "n,k,samples,max_tightness,mean_tightness,failures\n";
    char buf[160];
    for (const auto& r : records) {
        if (r.samples == 0) continue;
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g,%d\n", r.n, r.k, r.samples,
                      r.max_tightness, r.mean_tightness, r.failures);
        out += buf;
    }
    return out;
}

}  // namespace kakeya
