#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kakeya/serialize.hpp"
#include "test_util.hpp"

using namespace kakeya;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
    auto rng = seeded_rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = test::random_poly(rng, 1 + static_cast<int>(uniform01(rng) * 10));
        const json j = p;
        const Poly back = j.get<Poly>();
        CHECK(back.coeffs() == p.coeffs());
    }
    // the wire format is the plain coefficient array
    const json j = Poly(std::vector<Cplx>{{-1, 0}, {0, 0}, {-3, 0}});
    CHECK(j.dump() == "[[-1.0,0.0],[0.0,0.0],[-3.0,0.0]]");
}

TEST_CASE("bound report carries nulls without context") {
    const Poly t(std::vector<Cplx>{{-1, 0}, {0, 0}, {-3, 0}});
    const json j = fujiwara_bound(t);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("kakeya_radius").is_null());
    const BoundReport back = j.get<BoundReport>();
    CHECK(!back.kakeya_radius.has_value());
    CHECK(back.fujiwara_radius == doctest::Approx(2.0 / std::sqrt(3.0)));

    const json j2 = fujiwara_bound(t, 3, 2);
    const BoundReport back2 = j2.get<BoundReport>();
    REQUIRE(back2.kakeya_radius.has_value());
    CHECK(*back2.n == 3);
    CHECK(*back2.k == 2);
}

TEST_CASE("certificate documents re-parse") {
    const Poly p = Poly::from_roots(std::vector<Cplx>{{1, 0}, {-1, 0}, {5, 0}});
    const KakeyaCertificate cert = certify(p, std::vector<Cplx>{{1, 0}, {-1, 0}}, Disc{});
    const json j = cert;
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("perturbation").is_null());

    const KakeyaCertificate back = j.get<KakeyaCertificate>();
    CHECK(back.n == cert.n);
    CHECK(back.k == cert.k);
    CHECK(back.theorem_holds == cert.theorem_holds);
    CHECK(back.witness.t.coeffs() == cert.witness.t.coeffs());
    CHECK(back.nodes.weights == cert.nodes.weights);
    REQUIRE(back.witness_distance.has_value());
    CHECK(*back.witness_distance == *cert.witness_distance);

    // k = 1 node sets have no pairwise separation; it serializes as null
    const Poly q = Poly::from_roots(std::vector<Cplx>{{0.3, 0}, {7, 0}});
    const json j1 = certify(q, std::vector<Cplx>{{0.3, 0}}, Disc{});
    CHECK(j1.at("nodes").at("pairwise_min_separation").is_null());
    const KakeyaCertificate back1 = j1.get<KakeyaCertificate>();
    CHECK(std::isinf(back1.nodes.pairwise_min_separation));
}

TEST_CASE("apolarity and root result documents") {
    const Poly a = Poly::from_roots(std::vector<Cplx>{{1, 0}, {-1, 0}, {5, 0}});
    const Poly t(std::vector<Cplx>{{-1, 0}, {0, 0}, {-3, 0}});
    const json ja = apolar_operator(a, t, 3);
    CHECK(ja.at("schema_version") == kSchemaVersion);
    const ApolarityReport ra = ja.get<ApolarityReport>();
    CHECK(ra.apolar);

    const json jr = find_roots(t);
    CHECK(jr.at("schema_version") == kSchemaVersion);
    const RootResult rr = jr.get<RootResult>();
    CHECK(rr.converged);
    CHECK(rr.roots.size() == 2);
}

TEST_CASE("sweep records and CSV") {
    const auto records = sweep(2, 3, 2, -1, 5, 3);
    const json j = records;
    const auto back = j.get<std::vector<SweepRecord>>();
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].n == records[i].n);
        CHECK(back[i].max_tightness == records[i].max_tightness);
        CHECK(back[i].first_failure == records[i].first_failure);
    }

    const std::string csv = sweep_csv(records);
    CHECK(csv.rfind("n,k,samples,max_tightness,mean_tightness,failures\n", 0) == 0);
    // one line per non-empty cell plus the header
    std::size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == records.size() + 1);
}
