#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdiscord/analysis.hpp"
#include "qdiscord/constants.hpp"
#include "qdiscord/decay_rates.hpp"
#include "qdiscord/errors.hpp"
#include "test_support.hpp"

using namespace qdiscord;

TEST_CASE("envelope discord matches the full pipeline in envelope mode")
{
    const double w = 1e13;
    for (double x : {0.0, 1e-6, 0.01, 0.3, 1.0, 4.0, 12.0}) {
        const double L = 5e-3;
        const auto rho = closed_form_state({L, w, x / L});
        CAPTURE(x);
        CHECK(std::abs(envelope_discord(x) - discord(rho).delta) < 1e-12);
    }
    CHECK(envelope_discord(0.0) == doctest::Approx(kLn2).epsilon(1e-15));
}

TEST_CASE("envelope discord is strictly decreasing")
{
    double prev = envelope_discord(0.0);
    for (double x = 1e-6; x < 15.0; x *= 1.02) {
        const double v = envelope_discord(x);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("detection times for the reference rates")
{
    const double w = 1e13;
    struct Case {
        double lambda_big, lo, hi;
    };
    // tabulated decay rates for Adler, GRW and Diosi
    for (const Case c : {Case{0.50103e7, 3e-8, 3e-6}, Case{0.0050103, 3e1, 3e3}, Case{1.9659e-4, 5e2, 5e4}}) {
        const auto r = detection_time(c.lambda_big, w);
        CAPTURE(c.lambda_big);
        CHECK(r.converged);
        CHECK(r.t_detect >= c.lo);
        CHECK(r.t_detect <= c.hi);
        CHECK(std::abs(envelope_discord(c.lambda_big * r.t_detect) - r.threshold) <= 1e-9);
        CHECK(r.threshold == kDefaultThresholdFrac * kLn2);
    }
}

TEST_CASE("detection time decreases with Lambda")
{
    double prev = INFINITY;
    for (double L = 1e-6; L <= 1e8; L *= 1.5) {
        const auto r = detection_time(L, 1e13);
        CHECK(r.converged);
        CHECK(r.t_detect < prev);
        prev = r.t_detect;
    }
}

TEST_CASE("detection without decay")
{
    const auto r = detection_time(0.0, 1e13);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.message.empty());
    CHECK_THROWS_AS(detection_time(-1.0, 1e13), DomainError);
    CHECK_THROWS_AS(detection_time(1.0, 1e13, 1.0), DomainError);
    CHECK_THROWS_AS(detection_time(1.0, 1e13, 0.0), DomainError);
}

TEST_CASE("discord trace")
{
    const std::vector<double> zero{0.0};
    CHECK(std::abs(discord_trace(1.0, 1e13, zero).front().delta - kLn2) < 1e-12);

    std::vector<double> grid;
    for (int i = 0; i < 100; ++i) {
        grid.push_back(i * 37.0);
    }
    for (const auto& pt : discord_trace(0.0, 1e13, grid)) {
        CHECK(std::abs(pt.delta - kLn2) < 1e-12);
        CHECK(pt.envelope);
    }

    const double L = 5e-3;
    const std::vector<double> late{10.0 / L};
    CHECK(discord_trace(L, 1e13, late).front().delta < 1e-3);

    const auto exact = discord_trace(0.5, 1.0, std::vector<double>{0.0, 1.0, 2.0});
    CHECK_FALSE(exact[1].envelope);
    CHECK(exact[1].im_rho14 != 0.0);

    const std::vector<double> unsorted{1.0, 0.5};
    CHECK_THROWS_AS(discord_trace(1.0, 1.0, unsorted), DomainError);
    const std::vector<double> negative{-1.0};
    CHECK_THROWS_AS(discord_trace(1.0, 1.0, negative), DomainError);
}

TEST_CASE("log grid")
{
    const auto g = log_grid(1e-9, 1e-4, 6);
    REQUIRE(g.size() == 6);
    CHECK(g.front() == 1e-9);
    CHECK(g.back() == 1e-4);
    CHECK(rel_err(g[2], 1e-7) < 1e-14);
    CHECK_THROWS_AS(log_grid(1e-9, 1e-4, 1), DomainError);
    CHECK_THROWS_AS(log_grid(0.0, 1e-4, 3), DomainError);
}

TEST_CASE("CSL bound scan")
{
    const auto p = table1_preset(Preset::Grw).params;

    SUBCASE("reference r_C")
    {
        const auto scan = csl_bound_scan(p, kDefaultLambdaCap, 1e-7, 1e-6, 2);
        REQUIRE(scan.front().r_c == 1e-7);
        const double bound = scan.front().lambda_bound;
        CHECK(bound >= 1e-4);
        CHECK(bound <= 1e-2);
        CHECK(1e-17 < bound); // GRW allowed
        CHECK(1e-8 < bound);  // Adler allowed
    }
    SUBCASE("bound scales with the cap")
    {
        const auto a = csl_bound_scan(p, 1e12, 1e-8, 1e-5, 7);
        const auto b = csl_bound_scan(p, 3e10, 1e-8, 1e-5, 7);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(rel_err(a[i].lambda_bound / b[i].lambda_bound, 1e12 / 3e10) < 1e-14);
        }
    }
    SUBCASE("finite, positive and consistent over the full range")
    {
        const auto scan = csl_bound_scan(p, kDefaultLambdaCap, 1e-9, 1e-4, 200);
        double prev_rc = 0.0;
        for (const auto& pt : scan) {
            CHECK(std::isfinite(pt.lambda_bound));
            CHECK(pt.lambda_bound > 0);
            CHECK(pt.r_c > prev_rc);
            prev_rc = pt.r_c;
            const double lambda_big = lambda_from_eta(eta_csl(p, pt.lambda_bound, pt.r_c), p);
            CHECK(rel_err(lambda_big, kDefaultLambdaCap) < 1e-10);
        }
    }
    SUBCASE("doubling the points keeps the endpoints")
    {
        const auto a = csl_bound_scan(p, kDefaultLambdaCap, 1e-9, 1e-4, 25);
        const auto b = csl_bound_scan(p, kDefaultLambdaCap, 1e-9, 1e-4, 50);
        CHECK(b.size() == 2 * a.size());
        CHECK(a.front().r_c == b.front().r_c);
        CHECK(a.back().r_c == b.back().r_c);
        CHECK(a.back().lambda_bound == b.back().lambda_bound);
    }
}
