#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kakeya/bounds.hpp"
#include "kakeya/error.hpp"
#include "kakeya/roots.hpp"
#include "test_util.hpp"

using namespace kakeya;

TEST_CASE("worked witness roots") {
    const Poly t(std::vector<Cplx>{{-1, 0}, {0, 0}, {-3, 0}});  // -3z^2 - 1
    const RootResult rr = find_roots(t);
    REQUIRE(rr.converged);
    REQUIRE(rr.roots.size() == 2);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    for (Cplx r : rr.roots) CHECK(std::abs(std::abs(r) - inv_sqrt3) <= 1e-10);

    const auto [zero, dist] = min_modulus_root(t, Cplx(0, 0));
    CHECK(dist == doctest::Approx(inv_sqrt3).epsilon(1e-10));
    CHECK(std::abs(std::abs(zero.imag()) - inv_sqrt3) <= 1e-10);
}

TEST_CASE("fourth roots of unity") {
    const Poly p(std::vector<Cplx>{{-1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}});  // z^4 - 1
    const RootResult rr = find_roots(p);
    REQUIRE(rr.converged);
    REQUIRE(rr.roots.size() == 4);
    // sorted by (re, im): -1, -i, i, 1
    CHECK(test::close(rr.roots[0], Cplx(-1, 0), 1e-10));
    CHECK(test::close(rr.roots[1], Cplx(0, -1), 1e-10));
    CHECK(test::close(rr.roots[2], Cplx(0, 1), 1e-10));
    CHECK(test::close(rr.roots[3], Cplx(1, 0), 1e-10));
}

TEST_CASE("double root comes back as a tight cluster") {
    const Poly p = Poly::from_roots(std::vector<Cplx>{{1, 0}, {1, 0}, {-2, 0}});
    const RootResult rr = find_roots(p);
    REQUIRE(rr.converged);
    int near_one = 0, near_minus_two = 0;
    for (Cplx r : rr.roots) {
        if (std::abs(r - Cplx(1, 0)) <= 1e-4) ++near_one;
        if (std::abs(r - Cplx(-2, 0)) <= 1e-8) ++near_minus_two;
    }
    CHECK(near_one == 2);
    CHECK(near_minus_two == 1);
}

TEST_CASE("roots at the origin are deflated exactly") {
    // z^3 (z - 0.5)
    const Poly p(std::vector<Cplx>{{0, 0}, {0, 0}, {0, 0}, {-0.5, 0}, {1, 0}});
    const RootResult rr = find_roots(p);
    REQUIRE(rr.converged);
    REQUIRE(rr.roots.size() == 4);
    int exact_zero = 0;
    for (Cplx r : rr.roots)
        if (r == Cplx(0, 0)) ++exact_zero;
    CHECK(exact_zero == 3);

    const Poly mono(std::vector<Cplx>{{0, 0}, {0, 0}, {3, 0}});  // 3z^2
    const RootResult mm = find_roots(mono);
    CHECK(mm.converged);
    CHECK(mm.roots == std::vector<Cplx>{{0, 0}, {0, 0}});
}

TEST_CASE("residuals and containment on random polynomials") {
    auto rng = seeded_rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const int deg = 1 + static_cast<int>(uniform01(rng) * 14);
        const Poly p = test::random_poly(rng, deg);
        const RootResult rr = find_roots(p);
        REQUIRE(rr.converged);
        CHECK(static_cast<int>(rr.roots.size()) == deg);
        const double norm = p.coeff_one_norm();
        const double M = fujiwara_bound(p).fujiwara_radius;
        for (Cplx r : rr.roots) {
            CHECK(std::abs(p(r)) <=
                  kRootResidualTol * norm * std::pow(std::max(1.0, std::abs(r)), deg));
            CHECK(std::abs(r) <= M * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("monic reconstruction matches for degree <= 15") {
    auto rng = seeded_rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const int deg = 1 + static_cast<int>(uniform01(rng) * 14);
        const Poly p = test::random_poly(rng, deg);
        const RootResult rr = find_roots(p);
        REQUIRE(rr.converged);
        const Poly rebuilt = Poly::from_roots(rr.roots);
        const Cplx lead = p.leading();
        double max_abs = 0.0;
        for (Cplx c : p.coeffs()) max_abs = std::max(max_abs, std::abs(c));
        for (int i = 0; i <= deg; ++i) {
            const Cplx expect = p.coeff(i) / lead;
            const double scale = std::max(std::abs(expect), 1e-3 * max_abs / std::abs(lead));
            CHECK(std::abs(rebuilt.coeff(i) - expect) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("different seeds land on the same sorted multiset") {
    auto rng = seeded_rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 2 + static_cast<int>(uniform01(rng) * 8);
        std::vector<Cplx> roots;
        while (static_cast<int>(roots.size()) < deg) {
            const Cplx cand = uniform_in_disc(rng, 2.0);
            bool ok = true;
            for (Cplx r : roots)
                if (std::abs(r - cand) < 0.1) ok = false;
            if (ok) roots.push_back(cand);
        }
        const Poly p = Poly::from_roots(roots);
        const RootResult a = find_roots(p, kRootStepTol, kRootMaxIters, 111);
        const RootResult b = find_roots(p, kRootStepTol, kRootMaxIters, 222);
        REQUIRE(a.converged);
        REQUIRE(b.converged);
        for (std::size_t i = 0; i < a.roots.size(); ++i) {
            CHECK(std::abs(a.roots[i].real() - b.roots[i].real()) <= 1e-8);
            CHECK(std::abs(a.roots[i].imag() - b.roots[i].imag()) <= 1e-8);
        }
    }
}

TEST_CASE("min_modulus_root selects the nearest zero") {
    const Poly p = Poly::from_roots(std::vector<Cplx>{{5, 0}, {0.1, 0}});
    const auto [root, dist] = min_modulus_root(p, Cplx(0, 0));
    CHECK(test::close(root, Cplx(0.1, 0), 1e-10));
    CHECK(dist == doctest::Approx(0.1).epsilon(1e-9));

    const Poly q = Poly::from_roots(std::vector<Cplx>{{2, 1}, {-1, 0}});
    const auto [root2, dist2] = min_modulus_root(q, Cplx(2, 1));
    CHECK(dist2 <= 1e-8);
    CHECK(test::close(root2, Cplx(2, 1), 1e-8));
}

TEST_CASE("starved iteration budget reports non-convergence, not a wrong answer") {
    const Poly p = Poly::from_roots(std::vector<Cplx>{{3, 0}, {-2, 0}, {0, 1}, {1, -2}});
    const RootResult rr = find_roots(p, 1e-15, 1);
    CHECK(!rr.converged);
    CHECK(rr.roots.size() == 4);  // best iterate still has full multiplicity
    CHECK(rr.max_residual > kRootResidualTol);
    CHECK(rr.iterations == 1);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(find_roots(Poly::constant({1, 0})), error);
    CHECK_THROWS_AS(find_roots(Poly()), error);
    std::vector<Cplx> big(66, Cplx(1, 0));
    CHECK_THROWS_AS(find_roots(Poly(big)), error);
    const Poly ok(std::vector<Cplx>{{1, 0}, {1, 0}});
    CHECK_THROWS_AS(find_roots(ok, -1.0), error);
    CHECK_THROWS_AS(find_roots(ok, 1e-12, 0), error);
}
