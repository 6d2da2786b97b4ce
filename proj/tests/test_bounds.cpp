#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kakeya/bounds.hpp"
#include "kakeya/construction.hpp"
#include "kakeya/error.hpp"
#include "kakeya/roots.hpp"
#include "test_util.hpp"

using namespace kakeya;

TEST_CASE("inclusion radius examples") {
    // z^n - c
    for (int n = 2; n <= 6; ++n) {
        std::vector<Cplx> c(static_cast<std::size_t>(n) + 1, Cplx(0, 0));
        c[0] = Cplx(-0.7, 0.2);
        c[n] = Cplx(1, 0);
        const auto rep = fujiwara_bound(Poly(c));
        CHECK(rep.fujiwara_radius ==
              doctest::Approx(2.0 * std::pow(std::abs(c[0]), 1.0 / n)).epsilon(1e-12));
        CHECK(rep.argmax_index == 0);
    }

    // z - a
    const Poly lin(std::vector<Cplx>{{-3, 4}, {1, 0}});
    CHECK(fujiwara_bound(lin).fujiwara_radius == doctest::Approx(10.0).epsilon(1e-12));

    // the worked witness -3z^2 - 1
    const Poly t(std::vector<Cplx>{{-1, 0}, {0, 0}, {-3, 0}});
    const auto rep = fujiwara_bound(t);
    CHECK(rep.fujiwara_radius == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rep.subleading_term_radius == 0.0);
    CHECK(rep.argmax_index == 0);

    CHECK_THROWS_AS(fujiwara_bound(Poly::constant({2, 0})), error);
    CHECK_THROWS_AS(fujiwara_bound(Poly()), error);
}

TEST_CASE("origin roots are excluded from the max") {
    // z^2 (z - 0.001): without stripping, |a_0/a_3| terms would be absent anyway,
    // but the tiny cofactor root must still dominate correctly.
    const Poly p(std::vector<Cplx>{{0, 0}, {0, 0}, {-0.001, 0}, {1, 0}});
    const auto rep = fujiwara_bound(p);
    CHECK(rep.fujiwara_radius == doctest::Approx(0.002).epsilon(1e-12));

    const Poly mono(std::vector<Cplx>{{0, 0}, {0, 0}, {0, 0}, {2, 0}});
    const auto m = fujiwara_bound(mono);
    CHECK(m.fujiwara_radius == 0.0);
    CHECK(m.argmax_index == -1);
}

TEST_CASE("kakeya radius values") {
    CHECK(kakeya_radius(5, 5) == doctest::Approx(2.0 / std::numbers::ln2).epsilon(1e-15));
    CHECK(kakeya_radius(3, 2) == doctest::Approx(4.0 / std::numbers::ln2).epsilon(1e-15));
    CHECK(kakeya_radius(3, 2) == doctest::Approx(5.7707801635558534).epsilon(1e-12));
    // decreasing in k for fixed n
    for (int k = 2; k <= 12; ++k) CHECK(kakeya_radius(12, k) < kakeya_radius(12, k - 1));
    // k = n still exceeds the unit disc, hence carries no information there
    CHECK(kakeya_radius(7, 7) > 1.0);
    CHECK_THROWS_AS(kakeya_radius(3, 4), error);
    CHECK_THROWS_AS(kakeya_radius(3, 0), error);
}

TEST_CASE("chain inequality through alpha") {
    // 2(n-k+1) alpha(k) / k < 2(n-k+1) / ln 2, i.e. alpha(k)/k < 1/ln 2
    for (int k = 1; k <= 30; ++k)
        CHECK(alpha(k) / k < 1.0 / std::numbers::ln2);
    for (int n = 2; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(2.0 * (n - k + 1) * alpha(k) / k < kakeya_radius(n, k));
}

TEST_CASE("bound disc for a general frame") {
    const Disc unit{};
    const Disc b = bound_disc_for_general_frame(unit, 3, 2);
    CHECK(b.radius == doctest::Approx(5.7707801635558534).epsilon(1e-12));
    CHECK(b.center == Cplx(0, 0));

    const Disc small{Cplx(2, 1), 0.5};
    const Disc b2 = bound_disc_for_general_frame(small, 3, 2);
    CHECK(b2.center == Cplx(2, 1));
    CHECK(b2.radius == doctest::Approx(0.5 * 4.0 / std::numbers::ln2).epsilon(1e-12));

    const Disc b3 = bound_disc_for_general_frame(Disc{Cplx(0, 0), 2.0}, 5, 5);
    CHECK(b3.radius == doctest::Approx(4.0 / std::numbers::ln2).epsilon(1e-12));
}

TEST_CASE("all computed roots respect the inclusion radius") {
    auto rng = seeded_rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const int deg = 1 + static_cast<int>(uniform01(rng) * 14);
        const Poly p = test::random_poly(rng, deg);
        const double M = fujiwara_bound(p).fujiwara_radius;
        const RootResult rr = find_roots(p);
        REQUIRE(rr.converged);
        for (Cplx r : rr.roots) CHECK(std::abs(r) <= M * (1.0 + 1e-9));
    }
}

TEST_CASE("witness inclusion radius stays under the kakeya radius") {
    auto rng = seeded_rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(uniform01(rng) * 8);
        const int n = k + static_cast<int>(uniform01(rng) * 10);
        const auto nodes = test::random_nodes(rng, k, 1e-3);
        const WitnessPoly w = build_witness(solve_weights(nodes, k - 1), n);
        const auto rep = fujiwara_bound(w.t, n, k);
        REQUIRE(rep.kakeya_radius.has_value());
        CHECK(rep.fujiwara_radius <= *rep.kakeya_radius * (1.0 + 1e-9));
        // the single-term radius may fall short of the full max (the worked
        // fixture does exactly that); only record, never assert an ordering.
        CHECK(rep.subleading_term_radius >= 0.0);
    }
}
