#include "kakeya/serialize.hpp"

#include <cmath>
#include <limits>

namespace kakeya {

using nlohmann::json;

namespace {

json finite_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

template <typename T>
json opt_to_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return json(*v);
}

}  // namespace

void to_json(json& j, const Poly& p) { j = p.coeffs(); }

void from_json(const json& j, Poly& p) {
    std::vector<Cplx> coeffs = j.get<std::vector<Cplx>>();
    p = Poly(std::move(coeffs));
}

void to_json(json& j, const Disc& d) {
    j = json{{"center", d.center}, {"radius", d.radius}};
}

void from_json(const json& j, Disc& d) {
    j.at("center").get_to(d.center);
    j.at("radius").get_to(d.radius);
}

void to_json(json& j, const ApolarityReport& r) {
    j = json{{"schema_version", kSchemaVersion},
             {"value", r.value},
             {"scale", r.scale},
             {"relative_residual", r.relative_residual},
             {"apolar", r.apolar},
             {"tol", r.tol},
             {"index", r.index}};
}

void from_json(const json& j, ApolarityReport& r) {
    j.at("value").get_to(r.value);
    j.at("scale").get_to(r.scale);
    j.at("relative_residual").get_to(r.relative_residual);
    j.at("apolar").get_to(r.apolar);
    j.at("tol").get_to(r.tol);
    j.at("index").get_to(r.index);
}

void to_json(json& j, const NodeSet& ns) {
    j = json{{"nodes", ns.nodes},
             {"weights", ns.weights},
             {"target_index", ns.target_index},
             {"pairwise_min_separation", finite_or_null(ns.pairwise_min_separation)},
             {"conditioning_warning", ns.conditioning_warning}};
}

void from_json(const json& j, NodeSet& ns) {
    j.at("nodes").get_to(ns.nodes);
    j.at("weights").get_to(ns.weights);
    j.at("target_index").get_to(ns.target_index);
    const auto& sep = j.at("pairwise_min_separation");
    ns.pairwise_min_separation =
        sep.is_null() ? std::numeric_limits<double>::infinity() : sep.get<double>();
    j.at("conditioning_warning").get_to(ns.conditioning_warning);
}

void to_json(json& j, const WitnessPoly& w) {
    j = json{{"t", w.t}, {"n", w.n}, {"k", w.k}, {"source", w.source}};
}

void from_json(const json& j, WitnessPoly& w) {
    j.at("t").get_to(w.t);
    j.at("n").get_to(w.n);
    j.at("k").get_to(w.k);
    j.at("source").get_to(w.source);
}

void to_json(json& j, const BoundReport& r) {
    j = json{{"schema_version", kSchemaVersion},
             {"fujiwara_radius", r.fujiwara_radius},
             {"subleading_term_radius", r.subleading_term_radius},
             {"argmax_index", r.argmax_index},
             {"kakeya_radius", opt_to_json(r.kakeya_radius)},
             {"n", opt_to_json(r.n)},
             {"k", opt_to_json(r.k)}};
}

void from_json(const json& j, BoundReport& r) {
    j.at("fujiwara_radius").get_to(r.fujiwara_radius);
    j.at("subleading_term_radius").get_to(r.subleading_term_radius);
    j.at("argmax_index").get_to(r.argmax_index);
    r.kakeya_radius = j.at("kakeya_radius").is_null()
                          ? std::nullopt
                          : std::optional<double>(j.at("kakeya_radius").get<double>());
    r.n = j.at("n").is_null() ? std::nullopt : std::optional<int>(j.at("n").get<int>());
    r.k = j.at("k").is_null() ? std::nullopt : std::optional<int>(j.at("k").get<int>());
}

void to_json(json& j, const RootResult& r) {
    j = json{{"schema_version", kSchemaVersion},
             {"roots", r.roots},
             {"max_residual", r.max_residual},
             {"iterations", r.iterations},
             {"converged", r.converged}};
}

void from_json(const json& j, RootResult& r) {
    j.at("roots").get_to(r.roots);
    j.at("max_residual").get_to(r.max_residual);
    j.at("iterations").get_to(r.iterations);
    j.at("converged").get_to(r.converged);
}

void to_json(json& j, const KakeyaCertificate& c) {
    j = json{{"schema_version", kSchemaVersion},
             {"n", c.n},
             {"k", c.k},
             {"frame", c.frame},
             {"nodes", c.nodes},
             {"witness", c.witness},
             {"bound_disc", c.bound_disc},
             {"apolarity", c.apolarity},
             {"witness_zero", opt_to_json(c.witness_zero)},
             {"witness_distance", opt_to_json(c.witness_distance)},
             {"theorem_holds", c.theorem_holds},
             {"disc_comparison", c.disc_comparison}};
    if (c.perturbation) {
        j["perturbation"] = json{{"applied", c.perturbation->applied},
                                 {"epsilon", c.perturbation->epsilon},
                                 {"moved", c.perturbation->moved}};
    } else {
        j["perturbation"] = nullptr;
    }
}

void from_json(const json& j, KakeyaCertificate& c) {
    j.at("n").get_to(c.n);
    j.at("k").get_to(c.k);
    j.at("frame").get_to(c.frame);
    j.at("nodes").get_to(c.nodes);
    j.at("witness").get_to(c.witness);
    j.at("bound_disc").get_to(c.bound_disc);
    j.at("apolarity").get_to(c.apolarity);
    c.witness_zero = j.at("witness_zero").is_null()
                         ? std::nullopt
                         : std::optional<Cplx>(j.at("witness_zero").get<Cplx>());
    c.witness_distance = j.at("witness_distance").is_null()
                             ? std::nullopt
                             : std::optional<double>(j.at("witness_distance").get<double>());
    j.at("theorem_holds").get_to(c.theorem_holds);
    j.at("disc_comparison").get_to(c.disc_comparison);
    if (j.at("perturbation").is_null()) {
        c.perturbation = std::nullopt;
    } else {
        PerturbationInfo info;
        j.at("perturbation").at("applied").get_to(info.applied);
        j.at("perturbation").at("epsilon").get_to(info.epsilon);
        j.at("perturbation").at("moved").get_to(info.moved);
        c.perturbation = info;
    }
}

void to_json(json& j, const GeneralizedCertificate& c) {
    j = json{{"schema_version", kSchemaVersion},
             {"n", c.n},
             {"k", c.k},
             {"target_index", c.target_index},
             {"frame", c.frame},
             {"nodes", c.nodes},
             {"witness", c.witness},
             {"bound", c.bound},
             {"bound_disc", c.bound_disc},
             {"apolarity", c.apolarity},
             {"witness_zero", opt_to_json(c.witness_zero)},
             {"witness_distance", opt_to_json(c.witness_distance)},
             {"holds", c.holds},
             {"bound_kind", c.bound_kind}};
}

void to_json(json& j, const SweepRecord& r) {
    j = json{{"n", r.n},
             {"k", r.k},
             {"samples", r.samples},
             {"max_tightness", r.max_tightness},
             {"mean_tightness", r.mean_tightness},
             {"failures", r.failures},
             {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)}};
}

void from_json(const json& j, SweepRecord& r) {
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("samples").get_to(r.samples);
    j.at("max_tightness").get_to(r.max_tightness);
    j.at("mean_tightness").get_to(r.mean_tightness);
    j.at("failures").get_to(r.failures);
    r.first_failure =
        j.at("first_failure").is_null() ? std::string() : j.at("first_failure").get<std::string>();
}

}  // namespace kakeya
