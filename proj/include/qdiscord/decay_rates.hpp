#pragma once

#include <string>

#include "qdiscord/constants.hpp"
#include "qdiscord/params.hpp"

namespace qdiscord {

/// Dephasing strength of one noise model and the decay rate it induces.
struct DecayRate {
    double eta = 0.0;        //!< double-commutator coefficient [1/(m^2 s)]
    double lambda_big = 0.0; //!< decay-rate constant [1/s]
    std::string model_tag;
};

/// Environmental momentum-diffusion coefficients [1/(m^2 s)].
struct EnvironmentRates {
    double scattering = 0.0;
    double emission = 0.0;
    double absorption = 0.0;
    double collision = 0.0;
    double total = 0.0;
};

double eta_csl(const ExperimentParams& p, double lambda_csl, double r_c);

double eta_diosi(const ExperimentParams& p, const PhysicalConstants& c = kConstants);

EnvironmentRates gamma_environment(const ExperimentParams& p, const noise::Environmental& env,
                                   const PhysicalConstants& c = kConstants);

/// Lambda = 2 eta hbar / (3 omega m0). The only eta -> Lambda conversion.
double lambda_from_eta(double eta, const ExperimentParams& p, const PhysicalConstants& c = kConstants);

/// eta and Lambda for any noise model. Environmental uses eta = Gamma/2.
DecayRate decay_rate(const ExperimentParams& p, const NoiseModel& model,
                     const PhysicalConstants& c = kConstants);

/*!
 * Newtonian interaction energy of two homogeneous spheres of mass m and
 * radius R_prime whose centres are `separation` apart: the quadratic
 * inner form for |separation| <= R_prime, the point-mass form outside.
 * The two branches are not continuous at R_prime.
 */
double newtonian_pair_potential(double separation, double m, double R_prime,
                                const PhysicalConstants& c = kConstants);

} // namespace qdiscord
