#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qdiscord/evolution.hpp"
#include "qdiscord/params.hpp"
#include "qdiscord/quantum_information.hpp"

namespace qdiscord {

/// Fraction of the initial discord ln 2 that defines detection. Frozen by
/// matching the detection times read off the discord curves for the three
/// reference models (roughly 1e-7 s, 100 s and 1500 s).
inline constexpr double kDefaultThresholdFrac = 0.5;

/// Lambda_CSL above which discord would vanish within the observed 1e-12 s.
inline constexpr double kDefaultLambdaCap = 1e12;

struct DetectionResult {
    double t_detect = 0.0;   //!< [s]
    double threshold = 0.0;  //!< [nats]
    double lambda_big = 0.0; //!< [1/s]
    bool converged = false;
    std::string message;
};

/// Discord of the envelope state as a function of x = Lambda t. Strictly
/// decreasing from ln 2 at x = 0 towards 0.
double envelope_discord(double lambda_t);

/*!
 * Smallest t with envelope discord equal to threshold_frac * ln 2, found
 * by doubling a bracket and bisecting. Lambda = 0 yields a non-converged
 * result (discord stays at ln 2). Throws DomainError for Lambda < 0 or
 * threshold_frac outside (0, 1).
 */
DetectionResult detection_time(double lambda_big, double omega,
                               double threshold_frac = kDefaultThresholdFrac);

struct TracePoint {
    double t = 0.0;
    double delta = 0.0;
    std::array<double, 4> sigma{};
    double rho11 = 0.0; //!< population of |0_L 0_R>
    double rho22 = 0.0; //!< population of |1_L 0_R>
    double re_rho23 = 0.0;
    double re_rho14 = 0.0;
    double im_rho14 = 0.0;
    bool envelope = false;
};

using DiscordTrace = std::vector<TracePoint>;

struct TraceOptions {
    EvalMode mode = EvalMode::Auto;
    ConditionalWeights weights = ConditionalWeights::Normalized;
};

/// Discord and spectrum over a sorted, non-negative time grid.
DiscordTrace discord_trace(double lambda_big, double omega, std::span<const double> t_grid,
                           const TraceOptions& options = {});

struct ExclusionPoint {
    double r_c = 0.0;          //!< [m]
    double lambda_bound = 0.0; //!< largest allowed lambda_CSL [1/s]
};

/// `points` log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

/// Upper bound on lambda_CSL on a log grid of r_C: the value giving
/// Lambda = lambda_cap, obtained from the Lambda computed at lambda_CSL = 1.
std::vector<ExclusionPoint> csl_bound_scan(const ExperimentParams& p, double lambda_cap,
                                           double rc_min, double rc_max, int points);

} // namespace qdiscord
