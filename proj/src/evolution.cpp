#include "qdiscord/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

// e^{-Lambda t} times the s-dependent factors of the solution, where
// s^2 = Lambda^2 - 4 omega^2 may be negative.
struct DampedFactors {
    double decay = 1.0;   // e^{-Lambda t}
    double sinh_s = 0.0;  // e^{-Lambda t} sinh(st)/s
    double cosh_m1 = 0.0; // e^{-Lambda t} (cosh(st) - 1)/s^2
};

DampedFactors damped_factors(double lambda_big, double omega, double t)
{
    DampedFactors f;
    f.decay = std::exp(-lambda_big * t);
    const double q = lambda_big * lambda_big - 4.0 * omega * omega;
    const double z = q * t * t;

    if (z > 1.0) {
        // Real s with st > 1: combine exponents so nothing overflows.
        const double s = std::sqrt(q);
        // Lambda - s written without cancellation for Lambda >> omega.
        const double slow_rate = 4.0 * omega * omega / (lambda_big + s);
        const double slow = std::exp(-slow_rate * t);
        const double fast = std::exp(-(lambda_big + s) * t);
        f.sinh_s = (slow - fast) / (2.0 * s);
        f.cosh_m1 = (0.5 * (slow + fast) - f.decay) / q;
        return f;
    }

    // sinh(r)/r and (cosh(r) - 1)/r^2 as functions of z = r^2.
    double sinhc = 1.0;
    double cm1 = 0.5;
    if (std::abs(z) < 1e-6) {
        sinhc = 1.0 + z * (1.0 / 6.0 + z / 120.0);
        cm1 = 0.5 + z * (1.0 / 24.0 + z / 720.0);
    }
    else if (z > 0) {
        const double r = std::sqrt(z);
        const double h = std::sinh(0.5 * r) / r;
        sinhc = std::sinh(r) / r;
        cm1 = 2.0 * h * h;
    }
    else {
        const double r = std::sqrt(-z);
        const double h = std::sin(0.5 * r) / r;
        sinhc = std::sin(r) / r;
        cm1 = 2.0 * h * h;
    }
    f.sinh_s = f.decay * t * sinhc;
    f.cosh_m1 = f.decay * t * t * cm1;
    return f;
}

double clamp_unit(double v)
{
    if (v < 0 && v >= -1e-10) {
        return 0.0;
    }
    if (v > 1 && v <= 1 + 1e-10) {
        return 1.0;
    }
    return v;
}

void rk4_step(DensityMatrix4::Matrix& rho, double h, double lambda_big, double omega)
{
    using M = DensityMatrix4::Matrix;
    const M k1 = generator(rho, lambda_big, omega);
    const M k2 = generator(rho + 0.5 * h * k1, lambda_big, omega);
    const M k3 = generator(rho + 0.5 * h * k2, lambda_big, omega);
    const M k4 = generator(rho + h * k3, lambda_big, omega);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // Remove round-off drift out of the Hermitian unit-trace set.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
}

DensityMatrix4::Matrix integrate(const EvolutionInputs& in, int steps)
{
    DensityMatrix4::Matrix rho = initial_state().matrix();
    const double h = in.t / steps;
    for (int i = 0; i < steps; ++i) {
        rk4_step(rho, h, in.lambda_big, in.omega);
    }
    return rho;
}

} // namespace

std::array<double, 4> DensityMatrix4::dense_eigenvalues() const
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

void EvolutionInputs::validate() const
{
    if (!std::isfinite(lambda_big) || lambda_big < 0) {
        throw DomainError("evolution: Lambda must be finite and >= 0");
    }
    if (!std::isfinite(omega) || omega <= 0) {
        throw DomainError("evolution: omega must be finite and > 0");
    }
    if (!std::isfinite(t) || t < 0) {
        throw DomainError("evolution: t must be finite and >= 0");
    }
}

bool uses_envelope(double lambda_big, double omega, EvalMode mode)
{
    return mode == EvalMode::Auto && lambda_big < kEnvelopeRatio * omega;
}

DensityMatrix4 initial_state()
{
    DensityMatrix4 rho;
    rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = 0.5;
    return rho;
}

DensityMatrix4 closed_form_state(const EvolutionInputs& in, EvalMode mode)
{
    in.validate();
    const double lt = in.lambda_big * in.t;
    const double decay2 = std::exp(-2.0 * lt);

    DensityMatrix4 rho;
    rho(0, 0) = rho(3, 3) = -0.25 * std::expm1(-2.0 * lt);
    rho(1, 1) = rho(2, 2) = 0.25 * (1.0 + decay2);

    if (uses_envelope(in.lambda_big, in.omega, mode)) {
        rho(1, 2) = rho(2, 1) = 0.5 * std::exp(-lt);
        return rho;
    }

    const auto f = damped_factors(in.lambda_big, in.omega, in.t);
    const double l = in.lambda_big;
    rho(1, 2) = rho(2, 1) = 0.5 * f.decay + 0.5 * l * l * f.cosh_m1;
    const Complex corner{0.5 * l * f.sinh_s, in.omega * l * f.cosh_m1};
    rho(0, 3) = corner;
    rho(3, 0) = std::conj(corner);
    return rho;
}

DensityMatrix4::Matrix generator(const DensityMatrix4::Matrix& rho, double lambda_big, double omega)
{
    // One-based accessor so the entries read like the 4x4 equations.
    auto r = [&rho](int i, int j) { return rho(i - 1, j - 1); };

    DensityMatrix4::Matrix ham;
    ham << 0.0, -r(1, 2), -r(1, 3), -2.0 * r(1, 4),
           r(2, 1), 0.0, 0.0, -r(2, 4),
           r(3, 1), 0.0, 0.0, -r(3, 4),
           2.0 * r(4, 1), r(4, 2), r(4, 3), 0.0;

    DensityMatrix4::Matrix dc;
    dc << 2.0 * r(1, 1) - r(2, 2) - r(3, 3), 2.0 * r(1, 2) - r(2, 1) - r(3, 4),
          2.0 * r(1, 3) - r(2, 4) - r(3, 1), 2.0 * r(1, 4) - r(2, 3) - r(3, 2),

          2.0 * r(2, 1) - r(1, 2) - r(4, 3), 2.0 * r(2, 2) - r(1, 1) - r(4, 4),
          2.0 * r(2, 3) - r(4, 1) - r(1, 4), 2.0 * r(2, 4) - r(1, 3) - r(4, 2),

          2.0 * r(3, 1) - r(4, 2) - r(1, 3), 2.0 * r(3, 2) - r(4, 1) - r(1, 4),
          2.0 * r(3, 3) - r(4, 4) - r(1, 1), 2.0 * r(3, 4) - r(4, 3) - r(1, 2),

          2.0 * r(4, 1) - r(3, 2) - r(2, 3), 2.0 * r(4, 2) - r(3, 1) - r(2, 4),
          2.0 * r(4, 3) - r(3, 4) - r(2, 1), 2.0 * r(4, 4) - r(3, 3) - r(2, 2);

    return Complex{0.0, -omega} * ham - (0.5 * lambda_big) * dc;
}

int default_step_count(const EvolutionInputs& in)
{
    const double rate = 2.0 * in.lambda_big + 2.0 * in.omega;
    const double steps = std::ceil(in.t * rate / 0.01);
    return static_cast<int>(std::clamp(steps, 1.0, 1e9));
}

IntegrationResult numerical_state(const EvolutionInputs& in, int steps, double tolerance)
{
    in.validate();
    if (steps < 1) {
        throw DomainError("numerical_state: steps must be >= 1");
    }
    if (in.t == 0.0) {
        return {initial_state(), 0.0};
    }
    const auto coarse = integrate(in, steps);
    const auto fine = integrate(in, 2 * steps);
    IntegrationResult result{DensityMatrix4{fine}, (fine - coarse).cwiseAbs().maxCoeff()};
    if (tolerance > 0 && result.error_estimate > tolerance) {
        throw ConvergenceError("numerical_state: step-halving error " +
                               std::to_string(result.error_estimate) + " exceeds tolerance " +
                               std::to_string(tolerance) + " with " + std::to_string(steps) +
                               " steps");
    }
    return result;
}

std::array<double, 4> spectrum(const DensityMatrix4& rho)
{
    constexpr double tol = 1e-15;
    const auto& m = rho.matrix();
    bool x_shaped = std::abs(m(0, 0) - m(3, 3)) <= tol && std::abs(m(1, 1) - m(2, 2)) <= tol;
    for (int i = 0; i < 4 && x_shaped; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = i == j || i + j == 3;
            if (!on_pattern && std::abs(m(i, j)) > tol) {
                x_shaped = false;
                break;
            }
        }
    }

    std::array<double, 4> sigma{};
    if (x_shaped) {
        const double inner = m(1, 1).real();
        const double outer = m(0, 0).real();
        const double coh = std::abs(m(1, 2));
        const double corner = std::sqrt(std::abs(m(0, 3) * m(3, 0)));
        sigma = {inner - coh, inner + coh, outer - corner, outer + corner};
    }
    else {
        sigma = rho.dense_eigenvalues();
    }
    for (auto& v : sigma) {
        v = clamp_unit(v);
    }
    return sigma;
}

} // namespace qdiscord
