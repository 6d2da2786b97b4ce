#pragma once

#include <complex>

#include <json.hpp>

#include "kakeya/apolarity.hpp"
#include "kakeya/bounds.hpp"
#include "kakeya/construction.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/roots.hpp"
#include "kakeya/verifier.hpp"

// JSON wire formats. Complex numbers are [re, im] pairs; polynomials are
// arrays of pairs in ascending-power order. Top-level documents carry
// kSchemaVersion under "schema_version".

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& j, const std::complex<double>& z) {
        j = json::array({z.real(), z.imag()});
    }
    static void from_json(const json& j, std::complex<double>& z) {
        z = {j.at(0).get<double>(), j.at(1).get<double>()};
    }
};

}  // namespace nlohmann

namespace kakeya {

inline constexpr const char* kSchemaVersion = "kakeya/1";

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

void to_json(nlohmann::json& j, const Disc& d);
void from_json(const nlohmann::json& j, Disc& d);

void to_json(nlohmann::json& j, const ApolarityReport& r);
void from_json(const nlohmann::json& j, ApolarityReport& r);

void to_json(nlohmann::json& j, const NodeSet& ns);
void from_json(const nlohmann::json& j, NodeSet& ns);

void to_json(nlohmann::json& j, const WitnessPoly& w);
void from_json(const nlohmann::json& j, WitnessPoly& w);

void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

void to_json(nlohmann::json& j, const RootResult& r);
void from_json(const nlohmann::json& j, RootResult& r);

void to_json(nlohmann::json& j, const KakeyaCertificate& c);
void from_json(const nlohmann::json& j, KakeyaCertificate& c);

void to_json(nlohmann::json& j, const GeneralizedCertificate& c);

void to_json(nlohmann::json& j, const SweepRecord& r);
void from_json(const nlohmann::json& j, SweepRecord& r);

}  // namespace kakeya
