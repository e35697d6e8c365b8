#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "massbound/extremal.hpp"
#include "massbound/grids.hpp"
#include "massbound/occupancy.hpp"
#include "massbound/rng.hpp"

using namespace massbound;

// Frozen oracle values (mpmath, 50 digits; C0 entries use the exact C0).
namespace {
constexpr double kLogCoshQuarter = 0.030929803620161371;
constexpr double kLampA = 0.094070196379838629;   // (n=1, p=1/2, lambda=1)
constexpr double kLampB = 0.034156569217139953;   // same point, part (b)
constexpr double kSurvival01n10 = 0.3486784401;   // 0.9^10
constexpr double kLower100 = 0.1465300276191773;  // e^{-C0/4 * 1}
constexpr double kLegacy100 = 0.25688136531347021;
}  // namespace

TEST_CASE("survival probability q = (1-p)^n") {
    CHECK(survival_prob(0.0, 100) == 1.0);  // exact at the endpoints
    CHECK(survival_prob(1.0, 3) == 0.0);
    CHECK(survival_prob(0.5, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(survival_prob(0.1, 10) == doctest::Approx(kSurvival01n10).epsilon(1e-14));
    CHECK_THROWS_AS(survival_prob(0.5, 0), std::domain_error);
    CHECK_THROWS_AS(survival_prob(-0.1, 2), std::domain_error);

    // no silent underflow to subnormal garbage: stays a probability
    const double tiny = survival_prob(0.9999, 10000);
    CHECK(tiny >= 0.0);
    CHECK(tiny <= 1.0);
}

TEST_CASE("occupancy MGF gap (a): frozen points and edges") {
    CHECK(occupancy_mgf_gap_upper(1, 0.5, 1.0) == doctest::Approx(kLampA).epsilon(1e-13));
    CHECK(occupancy_mgf_gap_upper(3, 1.0, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));  // q = 0
    CHECK(occupancy_mgf_gap_upper(2, 0.0, 3.0) == 0.0);                                        // q = 1
    CHECK(occupancy_mgf_gap_upper(5, 0.3, 0.0) == 0.0);                                        // lambda = 0
    CHECK(occupancy_mgf_gap_upper(5, 0.2, 4.0) >= 0.0);
    CHECK_THROWS_AS(occupancy_mgf_gap_upper(1, 0.5, -0.5), std::domain_error);  // bounds need lambda >= 0
    CHECK_THROWS_AS(occupancy_mgf_gap_upper(0, 0.5, 1.0), std::domain_error);
}

TEST_CASE("occupancy MGF gap (b): frozen points and edges") {
    const double c0 = default_c0();
    CHECK(occupancy_mgf_gap_lower(1, 0.5, 1.0, c0) == doctest::Approx(kLampB).epsilon(1e-10));
    CHECK(occupancy_mgf_gap_lower(2, 0.0, 3.0, c0) == 0.0);  // p = 0 collapses both sides
    CHECK(occupancy_mgf_gap_lower(10, 0.3, 8.0, c0) >= 0.0);
    CHECK(0.5 / c0 - kLogCoshQuarter == doctest::Approx(kLampB).epsilon(1e-10));
    CHECK_THROWS_AS(occupancy_mgf_gap_lower(1, 0.5, -1.0, c0), std::domain_error);
    CHECK_THROWS_AS(occupancy_mgf_gap_lower(1, 0.5, 1.0, 0.0), std::domain_error);
}

TEST_CASE("occupancy MGF gaps stay nonnegative on random points") {
    const double c0 = default_c0();
    RngStream rng(110);
    for (int i = 0; i < 4000; ++i) {
        const long long n = 1LL << (rng.next_word() % 11);  // {1, 2, ..., 1024}
        const double p = rng.uniform01();
        const double lambda = 10.0 * static_cast<double>(n) * rng.uniform01();
        CHECK(occupancy_mgf_gap_upper(n, p, lambda) >= -1e-9);
        CHECK(occupancy_mgf_gap_lower(n, p, lambda, c0) >= -1e-9);
    }
}

TEST_CASE("upper tail bound") {
    const TailBound b = upper_tail_bound(100, 0.1);
    CHECK(b.upper == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(b.lambda_upper == doctest::Approx(20.0));
    CHECK(upper_tail_bound(10, 0.3).upper == doctest::Approx(std::exp(-0.9)).epsilon(1e-15));
    CHECK(upper_tail_bound(7, 1e-12).upper == doctest::Approx(1.0));  // eps -> 0+
    CHECK_THROWS_AS(upper_tail_bound(0, 0.1), std::domain_error);
    CHECK_THROWS_AS(upper_tail_bound(10, 0.0), std::domain_error);
    CHECK_THROWS_AS(upper_tail_bound(10, -0.5), std::domain_error);
}

TEST_CASE("Chernoff exponent optimality at lambda = 2 n eps") {
    RngStream rng(111);
    for (int i = 0; i < 50; ++i) {
        const long long n = 1 + static_cast<long long>(rng.next_word() % 1000);
        const double eps = 0.01 + 0.5 * rng.uniform01();
        const double nn = static_cast<double>(n);
        // independent 1-D minimization of the exponent over lambda
        const auto exponent = [&](double lam) { return lam * lam / (4.0 * nn) - lam * eps; };
        const double lam_hat = testutil::golden_min(exponent, 0.0, 8.0 * nn * eps, 1e-9 * nn);
        CHECK(std::fabs(lam_hat - 2.0 * nn * eps) <= 1e-4 * (2.0 * nn * eps));
        const double minimized = std::exp(exponent(lam_hat));
        const double bound = upper_tail_bound(n, eps).upper;
        CHECK(std::fabs(minimized - bound) <= 1e-8 * bound);
    }
}

TEST_CASE("lower tail bound and the legacy constant") {
    const double c0 = default_c0();
    const TailBound b = lower_tail_bound(100, 0.1, c0);
    CHECK(b.lower == doctest::Approx(kLower100).epsilon(1e-12));
    CHECK(b.legacy_lower == doctest::Approx(kLegacy100).epsilon(1e-14));
    CHECK(b.lambda_lower == doctest::Approx(c0 * 100.0 * 0.1 / 2.0).epsilon(1e-15));
    CHECK(lower_tail_bound(5, 1e-12, c0).lower == doctest::Approx(1.0));

    // lambda_lower minimizes lambda^2/(C0 n) - lambda eps
    const auto exponent = [&](double lam) { return lam * lam / (c0 * 100.0) - lam * 0.1; };
    const double lam_hat = testutil::golden_min(exponent, 0.0, 4.0 * c0 * 100.0 * 0.1, 1e-8);
    CHECK(std::fabs(lam_hat - b.lambda_lower) <= 1e-3);

    RngStream rng(112);
    for (int i = 0; i < 500; ++i) {
        const long long n = 1 + static_cast<long long>(rng.next_word() % 2000);
        const double eps = 1e-3 + rng.uniform01();
        const TailBound t = tail_bound(n, eps, c0);
        CHECK(t.lower <= t.legacy_lower);  // C0/4 > e/2 makes the new bound tighter
        CHECK(t.upper <= 1.0);
        CHECK(t.lower <= 1.0);
        CHECK(t.upper >= 0.0);
        CHECK(t.lower >= 0.0);
        // positive whenever the exponent is representable (exp underflows
        // to an honest 0 beyond that)
        if (c0 * static_cast<double>(n) * eps * eps / 4.0 < 700.0) {
            CHECK(t.upper > 0.0);
            CHECK(t.lower > 0.0);
        }
    }
}

TEST_CASE("internal facts from the occupancy lemma proof") {
    const double c0 = default_c0();

    SUBCASE("L(q) <= 1 on (0,1), with the q = 1/2 limit log(2)/2") {
        CHECK(occupancy_fact_ratio(0.5) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
        for (const double q : logit_grid(2001)) {
            CHECK(occupancy_fact_ratio(q) <= 1.0 + 1e-9);
        }
    }

    SUBCASE("R(p) = log(1/(1-p))/p >= 1 on (0,1)") {
        for (const double p : logit_grid(2001)) {
            CHECK(occupancy_fact_logfactor(p) >= 1.0 - 1e-9);
        }
        CHECK(occupancy_fact_logfactor(1e-9) == doctest::Approx(1.0).epsilon(1e-8));  // Taylor head
    }

    SUBCASE("monotone factor on (1/2,1): nondecreasing, limit 2/log 2, product beats C0") {
        const double limit = 2.0 / std::log(2.0);
        CHECK(occupancy_fact_monotone(0.5 + 1e-13) == doctest::Approx(limit).epsilon(1e-12));
        double prev = limit;
        for (const double q : logit_grid_upper(1001)) {
            if (q == 0.5) continue;
            const double m = occupancy_fact_monotone(q);
            CHECK(m >= prev - 1e-12);
            prev = m;
        }
        CHECK(4.0 * limit == doctest::Approx(8.0 / std::log(2.0)).epsilon(1e-15));
        CHECK(4.0 * limit > c0);
        CHECK_THROWS_AS(occupancy_fact_monotone(0.4), std::domain_error);
    }

    SUBCASE("f(q) >= 0 on (0, 1/2)") {
        for (const double q : logit_grid_lower(1001)) {
            if (q >= 0.5) continue;
            CHECK(occupancy_fact_gap(q) >= -1e-9);
        }
        CHECK_THROWS_AS(occupancy_fact_gap(0.6), std::domain_error);
    }
}
