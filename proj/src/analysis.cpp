#include "qdiscord/analysis.hpp"

#include <cmath>
#include <string>

#include "qdiscord/constants.hpp"
#include "qdiscord/decay_rates.hpp"
#include "qdiscord/errors.hpp"

namespace qdiscord {

double envelope_discord(double lambda_t)
{
    if (!(lambda_t >= 0)) {
        throw DomainError("envelope_discord: Lambda t must be >= 0");
    }
    // With u = e^{-x}: spectrum (1-u)^2/4, (1+u)^2/4, (1-u^2)/4 (twice);
    // conditional left states diag((1-u^2)/2, (1+u^2)/2).
    const double u = std::exp(-lambda_t);
    const double one_minus_u = -std::expm1(-lambda_t);
    const double one_minus_u2 = -std::expm1(-2.0 * lambda_t);
    const std::array<double, 4> sigma{0.25 * one_minus_u * one_minus_u, 0.25 * (1.0 + u) * (1.0 + u),
                                      0.25 * one_minus_u2, 0.25 * one_minus_u2};
    const double s_total = entropy_of_spectrum(sigma.data(), 4);
    return kLn2 - s_total + binary_entropy(0.5 * one_minus_u2);
}

DetectionResult detection_time(double lambda_big, double omega, double threshold_frac)
{
    if (!std::isfinite(lambda_big) || lambda_big < 0) {
        throw DomainError("detection_time: Lambda must be finite and >= 0");
    }
    if (!std::isfinite(omega) || omega <= 0) {
        throw DomainError("detection_time: omega must be finite and > 0");
    }
    if (!(threshold_frac > 0 && threshold_frac < 1)) {
        throw DomainError("detection_time: threshold_frac must lie in (0, 1)");
    }

    DetectionResult result;
    result.lambda_big = lambda_big;
    result.threshold = threshold_frac * kLn2;
    if (lambda_big == 0) {
        result.message = "Lambda = 0: discord stays at ln 2, threshold never reached";
        return result;
    }

    // The envelope discord depends on Lambda t only; solve in x = Lambda t.
    const double target = result.threshold;
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (envelope_discord(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 200) {
            throw ConvergenceError("detection_time: failed to bracket the threshold");
        }
    }
    for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (envelope_discord(mid) > target) {
            lo = mid;
        }
        else {
            hi = mid;
        }
    }
    const double x = 0.5 * (lo + hi);
    result.t_detect = x / lambda_big;
    result.converged = result.t_detect > 0 &&
                       std::abs(envelope_discord(lambda_big * result.t_detect) - target) <= 1e-9;
    if (!result.converged) {
        result.message = "bisection did not reach the 1e-9 nats threshold tolerance";
    }
    return result;
}

DiscordTrace discord_trace(double lambda_big, double omega, std::span<const double> t_grid,
                           const TraceOptions& options)
{
    DiscordTrace trace;
    trace.reserve(t_grid.size());
    double previous = 0.0;
    for (double t : t_grid) {
        if (!(t >= previous)) {
            throw DomainError("discord_trace: time grid must be sorted and non-negative");
        }
        previous = t;
        const auto rho = closed_form_state({lambda_big, omega, t}, options.mode);
        TracePoint pt;
        pt.t = t;
        pt.sigma = spectrum(rho);
        pt.delta = discord(rho, {}, options.weights).delta;
        pt.rho11 = rho(0, 0).real();
        pt.rho22 = rho(1, 1).real();
        pt.re_rho23 = rho(1, 2).real();
        pt.re_rho14 = rho(0, 3).real();
        pt.im_rho14 = rho(0, 3).imag();
        pt.envelope = uses_envelope(lambda_big, omega, options.mode);
        trace.push_back(pt);
    }
    return trace;
}

std::vector<double> log_grid(double lo, double hi, int points)
{
    if (!(lo > 0) || !(hi > lo) || !std::isfinite(hi) || points < 2) {
        throw DomainError("log_grid: need 0 < lo < hi and points >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = std::exp(a + i * step);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<ExclusionPoint> csl_bound_scan(const ExperimentParams& p, double lambda_cap,
                                           double rc_min, double rc_max, int points)
{
    p.validate();
    if (!std::isfinite(lambda_cap) || lambda_cap <= 0) {
        throw DomainError("csl_bound_scan: lambda_cap must be finite and > 0");
    }
    std::vector<ExclusionPoint> out;
    for (double r_c : log_grid(rc_min, rc_max, points)) {
        // Lambda is linear in lambda_CSL, so one evaluation at lambda_CSL = 1 suffices.
        const double unit = lambda_from_eta(eta_csl(p, 1.0, r_c), p);
        const double bound = lambda_cap / unit;
        if (!(unit > 0) || !std::isfinite(bound)) {
            throw DomainError("csl_bound_scan: degenerate rate at r_c = " + std::to_string(r_c));
        }
        out.push_back({r_c, bound});
    }
    return out;
}

} // namespace qdiscord
