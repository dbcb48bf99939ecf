#include "qdiscord/decay_rates.hpp"

#include <cmath>
#include <complex>

#include "qdiscord/errors.hpp"
#include "qdiscord/special_functions.hpp"

namespace qdiscord {

namespace {

constexpr double kFactorial8 = 40320.0;

} // namespace

double eta_csl(const ExperimentParams& p, double lambda_csl, double r_c)
{
    p.validate();
    validate(NoiseModel{noise::Csl{lambda_csl, r_c}});
    const double form = gamma_perp(p.R / (std::sqrt(2.0) * r_c));
    const double width = -std::expm1(-(p.d * p.d) / (4.0 * r_c * r_c));
    return lambda_csl * (p.N * p.N) / (p.d * p.d) * form * width;
}

double eta_diosi(const ExperimentParams& p, const PhysicalConstants& c)
{
    p.validate();
    const double r3 = p.R_prime * p.R_prime * p.R_prime;
    return c.G * p.m * p.m / (4.0 * c.hbar * r3);
}

EnvironmentRates gamma_environment(const ExperimentParams& p, const noise::Environmental& env,
                                   const PhysicalConstants& c)
{
    p.validate();
    validate(NoiseModel{env});

    const std::complex<double> clausius = (env.epsilon - 1.0) / (env.epsilon + 2.0);
    const double r6 = std::pow(p.R_prime, 6);
    const double thermal = c.k_B * env.T / (c.hbar * c.c);     // inverse thermal wavelength
    const double thermal_i = c.k_B * env.T_i / (c.hbar * c.c);

    EnvironmentRates g;
    g.scattering = kFactorial8 * 8.0 * kZeta.zeta9 * c.c * r6 / (9.0 * kPi) *
                   std::pow(thermal, 9) * clausius.real() * clausius.real();
    const double radiative = 16.0 * std::pow(kPi, 5) * c.c * r6 / 189.0;
    g.emission = radiative * std::pow(thermal, 6) * clausius.imag();
    g.absorption = radiative * std::pow(thermal_i, 6) * clausius.imag();
    g.collision = 8.0 * std::sqrt(2.0 * kPi) * kZeta.zeta3 / (3.0 * kZeta.zeta3_half) *
                  std::sqrt(env.m_gas) * p.R_prime * p.R_prime * env.P / (c.hbar * c.hbar) *
                  std::sqrt(c.k_B * env.T);
    g.total = g.scattering + g.emission + g.absorption + g.collision;
    return g;
}

double lambda_from_eta(double eta, const ExperimentParams& p, const PhysicalConstants& c)
{
    if (!std::isfinite(eta) || eta < 0) {
        throw DomainError("lambda_from_eta: eta must be finite and >= 0");
    }
    return 2.0 * eta * c.hbar / (3.0 * p.omega * c.m0);
}

DecayRate decay_rate(const ExperimentParams& p, const NoiseModel& model, const PhysicalConstants& c)
{
    DecayRate rate;
    rate.model_tag = model_name(model);
    if (const auto* csl = std::get_if<noise::Csl>(&model)) {
        rate.eta = eta_csl(p, csl->lambda_csl, csl->r_c);
    }
    else if (std::holds_alternative<noise::Diosi>(model)) {
        rate.eta = eta_diosi(p, c);
    }
    else if (const auto* env = std::get_if<noise::Environmental>(&model)) {
        rate.eta = 0.5 * gamma_environment(p, *env, c).total;
    }
    else {
        p.validate();
    }
    rate.lambda_big = lambda_from_eta(rate.eta, p, c);
    return rate;
}

double newtonian_pair_potential(double separation, double m, double R_prime, const PhysicalConstants& c)
{
    if (!(m > 0) || !(R_prime > 0) || !std::isfinite(separation)) {
        throw DomainError("newtonian_pair_potential: need m > 0, R_prime > 0, finite separation");
    }
    const double r = std::abs(separation);
    const double scale = c.G * m * m;
    if (r <= R_prime) {
        const double ratio = r / R_prime;
        return -scale / R_prime * (1.2 - 0.5 * ratio * ratio);
    }
    return -scale / r;
}

} // namespace qdiscord
