#pragma once

#include <Eigen/Dense>

#include "qdiscord/evolution.hpp"

namespace qdiscord {

using Matrix2c = Eigen::Matrix2cd;

/// Projective measurement {|b0><b0|, |b1><b1|} on one qubit, with
/// |b0> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and |b1> orthogonal.
/// (0, 0) is the computational basis.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector2cd vector(int outcome) const;
    Matrix2c projector(int outcome) const;
};

enum class Side { Left, Right };

/// Weighting of the conditional entropies in the discord.
enum class ConditionalWeights {
    Normalized, //!< conditional states divided by p_j before the entropy
    PaperCompat //!< closed form with 1/4 prefactors, computational basis only
};

struct DiscordReport {
    double I_mutual = 0.0;
    double J_measured = 0.0;
    double delta = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
    double S_total = 0.0;
    double S_left = 0.0;
    double S_right = 0.0;
};

struct ConditionalEntropy {
    double value = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Eigenvalues below this count as zero in entropies.
inline constexpr double kEntropyCutoff = 1e-14;

/// -sum s ln s over eigenvalues, with 0 ln 0 = 0. Throws DomainError when
/// an eigenvalue is below -1e-10.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Entropy from a list of eigenvalues (same conventions).
double entropy_of_spectrum(const double* values, int count);

/// Partial trace keeping the given side.
Matrix2c reduce(const DensityMatrix4& rho, Side keep);

/// sum_j p_j S(rho_{L|j}) for a measurement on the right subsystem.
/// Branches with p_j < 1e-14 contribute 0.
ConditionalEntropy conditional_entropy_after_measurement(const DensityMatrix4& rho,
                                                         const MeasurementBasis& basis = {});

/// Discord delta(L:R) = I - J with the measurement on the right subsystem.
DiscordReport discord(const DensityMatrix4& rho, const MeasurementBasis& basis = {},
                      ConditionalWeights weights = ConditionalWeights::Normalized);

struct MinimizedDiscord {
    double delta_min = 0.0;
    MeasurementBasis basis;
};

/// Minimum of discord over projective measurements: a theta x phi grid
/// (which includes the computational basis) followed by a pattern search.
/// Throws DomainError for grid < 8.
MinimizedDiscord discord_minimized(const DensityMatrix4& rho, int grid);

/// Binary entropy -p ln p - (1-p) ln(1-p) in nats.
double binary_entropy(double p);

} // namespace qdiscord
