#include <doctest.h>

#include <cmath>
#include <iostream>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qdiscord/constants.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/quantum_information.hpp"
#include "test_support.hpp"

using namespace qdiscord;

namespace {

// basis index = n_L + 2 n_R, so the right mode is the most significant factor
DensityMatrix4 product_state(const Matrix2c& left, const Matrix2c& right)
{
    return DensityMatrix4(Eigen::kroneckerProduct(right, left).eval());
}

Matrix2c random_qubit_state(std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Matrix2c a;
    a << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    Matrix2c rho = a * a.adjoint();
    return rho / rho.trace().real();
}

double h2(double p) { return -p * std::log(p) - (1 - p) * std::log(1 - p); }

// Independent route: ln 2 + sum s ln s + conditional entropy with the
// normalized conditional states diag((1-e)/2, (1+e)/2).
double explicit_discord(double L, double w, double t)
{
    const auto rho = closed_form_state({L, w, t}, EvalMode::Exact);
    const auto& m = rho.matrix();
    const double inner = m(1, 1).real();
    const double outer = m(0, 0).real();
    const std::array<double, 4> sigma{inner - m(1, 2).real(), inner + m(1, 2).real(),
                                      outer - std::abs(m(0, 3)), outer + std::abs(m(0, 3))};
    double sum = 0.0;
    for (double s : sigma) {
        if (s > 1e-14) {
            sum += s * std::log(s);
        }
    }
    const double e = std::exp(-2.0 * L * t);
    const double cond = e < 1.0 ? h2(0.5 * (1.0 - e)) : 0.0;
    return kLn2 + sum + cond;
}

} // namespace

TEST_CASE("von Neumann entropy")
{
    CHECK(std::abs(von_neumann_entropy(initial_state().matrix())) < 1e-15);
    CHECK(rel_err(von_neumann_entropy(Eigen::Matrix4cd::Identity() * 0.25), std::log(4.0)) < 1e-15);
    Matrix2c d = Matrix2c::Zero();
    d(0, 0) = 0.75;
    d(1, 1) = 0.25;
    CHECK(von_neumann_entropy(d) == doctest::Approx(0.5623351446188083).epsilon(1e-14));
    Matrix2c bad = Matrix2c::Zero();
    bad(0, 0) = 1.1;
    bad(1, 1) = -0.1;
    CHECK_THROWS_AS(von_neumann_entropy(bad), DomainError);
}

TEST_CASE("measurement basis projectors")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        const MeasurementBasis b{ang(rng), ang(rng)};
        const Matrix2c p0 = b.projector(0);
        const Matrix2c p1 = b.projector(1);
        CHECK((p0 + p1 - Matrix2c::Identity()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((p0 * p1).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((p0 * p0 - p0).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(p0.trace() - 1.0) < 1e-14);
    }
}

TEST_CASE("partial traces")
{
    SUBCASE("evolved states have maximally mixed marginals")
    {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> lam(0.0, 10.0), om(0.2, 10.0), tt(0.0, 20.0);
        for (int i = 0; i < 200; ++i) {
            const auto rho = closed_form_state({lam(rng), om(rng), tt(rng)}, EvalMode::Exact);
            for (Side side : {Side::Left, Side::Right}) {
                CHECK((reduce(rho, side) - 0.5 * Matrix2c::Identity()).cwiseAbs().maxCoeff() < 1e-15);
            }
        }
    }
    SUBCASE("product state")
    {
        Matrix2c zero = Matrix2c::Zero();
        zero(0, 0) = 1.0;
        Matrix2c one = Matrix2c::Zero();
        one(1, 1) = 1.0;
        const auto rho = product_state(zero, one);
        CHECK(rho(2, 2) == Complex(1.0, 0.0));
        CHECK(reduce(rho, Side::Left) == zero);
        CHECK(reduce(rho, Side::Right) == one);
    }
    SUBCASE("random product states")
    {
        std::mt19937_64 rng(4);
        for (int i = 0; i < 100; ++i) {
            const Matrix2c a = random_qubit_state(rng);
            const Matrix2c b = random_qubit_state(rng);
            const auto rho = product_state(a, b);
            CHECK((reduce(rho, Side::Left) - a).cwiseAbs().maxCoeff() < 1e-14);
            CHECK((reduce(rho, Side::Right) - b).cwiseAbs().maxCoeff() < 1e-14);
            CHECK(std::abs(reduce(rho, Side::Left).trace() - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("conditional entropy after measuring the right mode")
{
    SUBCASE("pure conditionals at t = 0")
    {
        const auto c = conditional_entropy_after_measurement(initial_state());
        CHECK(std::abs(c.value) < 1e-15);
        CHECK(c.p0 == 0.5);
        CHECK(c.p1 == 0.5);
    }
    SUBCASE("maximally mixed conditionals at late times")
    {
        const auto rho = closed_form_state({1.0, 1.0, 40.0}, EvalMode::Exact);
        CHECK(rel_err(conditional_entropy_after_measurement(rho).value, kLn2) < 1e-12);
    }
    SUBCASE("normalized conditional states")
    {
        for (double lt : {0.01, 0.1, 0.5, 1.0, 3.0}) {
            const double L = 0.7;
            const auto rho = closed_form_state({L, 2.0, lt / L}, EvalMode::Exact);
            const double e = std::exp(-2.0 * lt);
            const double a = 0.5 * (1.0 - e), b = 0.5 * (1.0 + e);
            const double expected = -a * std::log(a) - b * std::log(b);
            CHECK(rel_err(conditional_entropy_after_measurement(rho).value, expected) < 1e-12);
        }
    }
    SUBCASE("swapping the outcome labels")
    {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> ang(0.0, kPi);
        for (int i = 0; i < 100; ++i) {
            const auto rho = closed_form_state({0.3, 1.1, 2.0 + i * 0.1}, EvalMode::Exact);
            const double th = ang(rng), ph = 2.0 * ang(rng);
            const auto c = conditional_entropy_after_measurement(rho, {th, ph});
            const auto swapped = conditional_entropy_after_measurement(rho, {kPi - th, ph + kPi});
            CHECK(std::abs(c.value - swapped.value) < 1e-12);
            CHECK(std::abs(c.p0 - swapped.p1) < 1e-12);
        }
    }
    SUBCASE("zero-probability branch")
    {
        Matrix2c zero = Matrix2c::Zero();
        zero(0, 0) = 1.0;
        const auto rho = product_state(0.5 * Matrix2c::Identity(), zero);
        const auto c = conditional_entropy_after_measurement(rho);
        CHECK(c.p1 == 0.0);
        CHECK(rel_err(c.value, kLn2) < 1e-15);
    }
}

TEST_CASE("discord report")
{
    SUBCASE("initial state carries ln 2")
    {
        const auto r = discord(initial_state());
        CHECK(std::abs(r.delta - kLn2) < 1e-12);
        CHECK(std::abs(r.S_total) < 1e-15);
    }
    SUBCASE("no decay keeps ln 2")
    {
        for (double t : {0.1, 1.0, 33.0, 1e6}) {
            CHECK(std::abs(discord(closed_form_state({0.0, 1.0, t})).delta - kLn2) < 1e-12);
        }
    }
    SUBCASE("decays to zero")
    {
        CHECK(std::abs(discord(closed_form_state({1.0, 1.0, 50.0}, EvalMode::Exact)).delta) < 1e-12);
    }
    SUBCASE("paper-compatible weights leave -ln(2)/2 at late times")
    {
        // ln 2 - ln 4 + (1/2) ln 2 once every eigenvalue is 1/4
        const auto rho = closed_form_state({1.0, 1.0, 50.0}, EvalMode::Exact);
        CHECK(std::abs(discord(rho, {}, ConditionalWeights::PaperCompat).delta + 0.5 * kLn2) < 1e-12);
        CHECK(std::abs(discord(initial_state(), {}, ConditionalWeights::PaperCompat).delta - kLn2) < 1e-12);
        CHECK_THROWS_AS(discord(rho, {0.3, 0.0}, ConditionalWeights::PaperCompat), DomainError);
    }
    SUBCASE("internal consistency over random states")
    {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> lam(0.0, 10.0), om(0.2, 10.0), tt(0.0, 20.0);
        for (int i = 0; i < 1000; ++i) {
            const double L = lam(rng), w = om(rng), t = tt(rng);
            const auto rho = closed_form_state({L, w, t}, EvalMode::Exact);
            const auto r = discord(rho);
            CAPTURE(L);
            CAPTURE(w);
            CAPTURE(t);
            CHECK(std::abs(r.delta - (r.I_mutual - r.J_measured)) < 1e-12);
            CHECK(std::abs(r.p0 + r.p1 - 1.0) < 1e-12);
            CHECK(r.p0 >= 0);
            CHECK(r.p1 >= 0);
            CHECK(std::abs(r.S_left - kLn2) < 1e-12);
            CHECK(std::abs(r.S_right - kLn2) < 1e-12);
            CHECK(r.delta >= -1e-10);
            CHECK(std::abs(r.delta - explicit_discord(L, w, t)) < 1e-12);
        }
    }
}

TEST_CASE("coarse-grained decay of discord")
{
    const double w = 1.0;
    const double L = 5e-4;
    std::vector<double> delta;
    for (double t = 0.0; t <= 1e4; t += 1.0) {
        delta.push_back(discord(closed_form_state({L, w, t}, EvalMode::Exact)).delta);
    }
    // suffix maxima: max over t2 >= t1 + 10 / omega
    std::vector<double> suffix(delta.size() + 1, -1.0);
    for (std::size_t i = delta.size(); i-- > 0;) {
        suffix[i] = std::max(suffix[i + 1], delta[i]);
    }
    for (std::size_t i = 0; i + 10 < delta.size(); ++i) {
        CHECK(suffix[i + 10] <= delta[i] + 1e-6);
    }
}

TEST_CASE("minimized discord")
{
    SUBCASE("classical product state")
    {
        Matrix2c zero = Matrix2c::Zero();
        zero(0, 0) = 1.0;
        Matrix2c mixed = Matrix2c::Zero();
        mixed(0, 0) = 0.3;
        mixed(1, 1) = 0.7;
        const auto rho = product_state(mixed, zero);
        CHECK(std::abs(discord_minimized(rho, 8).delta_min) < 1e-12);
        CHECK(std::abs(discord(rho, {1.1, 0.4}).delta) < 1e-12);
    }
    SUBCASE("Bell-like state is basis independent")
    {
        const auto m = discord_minimized(initial_state(), 12);
        CHECK(std::abs(m.delta_min - kLn2) < 1e-10);
        CHECK(std::abs(discord(initial_state(), {0.9, 2.0}).delta - kLn2) < 1e-10);
    }
    SUBCASE("never above the computational basis")
    {
        const auto rho = closed_form_state({0.1, 1.0, 5.0}, EvalMode::Exact);
        const double fixed = discord(rho).delta;
        const auto m = discord_minimized(rho, 16);
        std::cout << "[quantum_information] Lambda=0.1 omega=1 t=5: fixed-basis discord " << fixed
                  << ", minimized " << m.delta_min << " at theta=" << m.basis.theta
                  << " phi=" << m.basis.phi << "\n";
        CHECK(m.delta_min <= fixed + 1e-12);
        CHECK(std::abs(discord(rho, m.basis).delta - m.delta_min) < 1e-15);
    }
    CHECK_THROWS_AS(discord_minimized(initial_state(), 7), DomainError);
}
