#include "qdiscord/quantum_information.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "qdiscord/constants.hpp"
#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

constexpr double kNegativeTolerance = 1e-10;
constexpr double kBranchCutoff = 1e-14;

double entropy_term(double s)
{
    if (s < -kNegativeTolerance) {
        throw DomainError("entropy: eigenvalue " + std::to_string(s) + " is negative");
    }
    return s > kEntropyCutoff ? -s * std::log(s) : 0.0;
}

double entropy_2x2(const Matrix2c& m)
{
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    const double mid = 0.5 * (a + d);
    const std::array<double, 2> values{mid - half_gap, mid + half_gap};
    return entropy_of_spectrum(values.data(), 2);
}

// <b|_R rho |b>_R as an operator on the left mode (unnormalized).
Matrix2c project_right(const DensityMatrix4& rho, const Eigen::Vector2cd& b)
{
    Matrix2c out = Matrix2c::Zero();
    for (int l = 0; l < 2; ++l) {
        for (int lp = 0; lp < 2; ++lp) {
            Complex acc{0.0, 0.0};
            for (int r = 0; r < 2; ++r) {
                for (int rp = 0; rp < 2; ++rp) {
                    acc += std::conj(b(r)) * rho(l + 2 * r, lp + 2 * rp) * b(rp);
                }
            }
            out(l, lp) = acc;
        }
    }
    return out;
}

double xlogx_scaled(double p)
{
    // -p ln|2p|, zero at p = 0
    return p > kEntropyCutoff ? -p * std::log(std::abs(2.0 * p)) : 0.0;
}

} // namespace

Eigen::Vector2cd MeasurementBasis::vector(int outcome) const
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex phase = std::polar(1.0, phi);
    Eigen::Vector2cd v;
    if (outcome == 0) {
        v << c, phase * s;
    }
    else {
        v << -std::conj(phase) * s, c;
    }
    return v;
}

Matrix2c MeasurementBasis::projector(int outcome) const
{
    const auto v = vector(outcome);
    return v * v.adjoint();
}

double entropy_of_spectrum(const double* values, int count)
{
    double s = 0.0;
    for (int i = 0; i < count; ++i) {
        s += entropy_term(values[i]);
    }
    return s;
}

double binary_entropy(double p)
{
    const std::array<double, 2> values{p, 1.0 - p};
    return entropy_of_spectrum(values.data(), 2);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho)
{
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw DomainError("von_neumann_entropy: matrix must be square and non-empty");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw DomainError("von_neumann_entropy: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    return entropy_of_spectrum(ev.data(), static_cast<int>(ev.size()));
}

Matrix2c reduce(const DensityMatrix4& rho, Side keep)
{
    Matrix2c out = Matrix2c::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int k = 0; k < 2; ++k) {
                // basis index = n_L + 2 n_R
                out(a, b) += keep == Side::Left ? rho(a + 2 * k, b + 2 * k)
                                                : rho(k + 2 * a, k + 2 * b);
            }
        }
    }
    return out;
}

ConditionalEntropy conditional_entropy_after_measurement(const DensityMatrix4& rho,
                                                         const MeasurementBasis& basis)
{
    ConditionalEntropy result;
    std::array<double, 2> p{};
    for (int j = 0; j < 2; ++j) {
        const Matrix2c branch = project_right(rho, basis.vector(j));
        p[j] = branch.trace().real();
        if (p[j] < kBranchCutoff) {
            continue;
        }
        result.value += p[j] * entropy_2x2(branch / p[j]);
    }
    result.p0 = p[0];
    result.p1 = p[1];
    return result;
}

DiscordReport discord(const DensityMatrix4& rho, const MeasurementBasis& basis,
                      ConditionalWeights weights)
{
    DiscordReport report;
    const auto sigma = spectrum(rho);
    report.S_total = entropy_of_spectrum(sigma.data(), 4);
    report.S_left = entropy_2x2(reduce(rho, Side::Left));
    report.S_right = entropy_2x2(reduce(rho, Side::Right));

    const auto cond = conditional_entropy_after_measurement(rho, basis);
    report.p0 = cond.p0;
    report.p1 = cond.p1;
    double conditional = cond.value;
    if (weights == ConditionalWeights::PaperCompat) {
        if (basis.theta != 0.0 || basis.phi != 0.0) {
            throw DomainError("discord: paper-compatible weights require the computational basis");
        }
        // -(1/4)(1+e) ln|(1+e)/2| - (1/4)(1-e) ln|(1-e)/2| with the populations
        // (1 -/+ e)/4 of |0_L 0_R> and |1_L 0_R>.
        conditional = xlogx_scaled(rho(1, 1).real()) + xlogx_scaled(rho(0, 0).real());
    }

    report.I_mutual = report.S_left + report.S_right - report.S_total;
    report.J_measured = report.S_left - conditional;
    report.delta = report.I_mutual - report.J_measured;
    return report;
}

MinimizedDiscord discord_minimized(const DensityMatrix4& rho, int grid)
{
    if (grid < 8) {
        throw DomainError("discord_minimized: grid must be >= 8");
    }
    auto value = [&rho](double theta, double phi) {
        return discord(rho, MeasurementBasis{theta, phi}).delta;
    };

    MinimizedDiscord best{value(0.0, 0.0), MeasurementBasis{0.0, 0.0}};
    const double dtheta = kPi / (grid - 1);
    const double dphi = 2.0 * kPi / grid;
    for (int i = 0; i < grid; ++i) {
        for (int k = 0; k < grid; ++k) {
            const double theta = i * dtheta;
            const double phi = k * dphi;
            const double v = value(theta, phi);
            if (v < best.delta_min) {
                best = {v, {theta, phi}};
            }
        }
    }

    // Compass search around the best grid point.
    double step_theta = dtheta;
    double step_phi = dphi;
    while (step_theta > 1e-10 || step_phi > 1e-10) {
        bool moved = false;
        const std::array<std::array<double, 2>, 4> moves{
            {{step_theta, 0.0}, {-step_theta, 0.0}, {0.0, step_phi}, {0.0, -step_phi}}};
        for (const auto& mv : moves) {
            const MeasurementBasis trial{best.basis.theta + mv[0], best.basis.phi + mv[1]};
            const double v = value(trial.theta, trial.phi);
            if (v < best.delta_min) {
                best = {v, trial};
                moved = true;
            }
        }
        if (!moved) {
            step_theta *= 0.5;
            step_phi *= 0.5;
        }
    }
    return best;
}

} // namespace qdiscord
