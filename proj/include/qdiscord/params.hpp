#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qdiscord/constants.hpp"

namespace qdiscord {

/// Geometry and mode parameters of one diamond crystal, SI units.
struct ExperimentParams {
    double omega = 1e13;      //!< phonon angular frequency [rad/s]
    double N = 5e14;          //!< atoms per sublattice
    double m = 1e-11;         //!< sublattice mass [kg]
    double R = 1.3427e-6;     //!< cylinder radius [m]
    double d = 2.5e-4;        //!< cylinder width [m]
    double R_prime = 0.0;     //!< equal-volume sphere radius [m]

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;
};

/// Radius of the sphere with the same volume as a cylinder of radius R, width d.
double equal_volume_radius(double R, double d);

namespace noise {

struct Csl {
    double lambda_csl = 1e-17; //!< collapse rate [1/s]
    double r_c = 1e-7;         //!< localization length [m]
};

struct Diosi {};

struct Environmental {
    double T = 300.0;                 //!< ambient temperature [K]
    double T_i = 300.0;               //!< internal temperature [K]
    double P = 0.0;                   //!< gas pressure [Pa]
    std::complex<double> epsilon{1.0, 0.0};
    double m_gas = 28.97 * kConstants.amu;
};

struct None {};

} // namespace noise

using NoiseModel = std::variant<noise::Csl, noise::Diosi, noise::Environmental, noise::None>;

/// Lower-case tag used in config files: csl, diosi, environmental, none.
std::string model_name(const NoiseModel& model);

void validate(const NoiseModel& model);

struct Config {
    ExperimentParams params;
    NoiseModel model;
};

/*!
 * Parse flat `key = value` config text.
 *
 * One pair per line; `#` starts a comment; blank lines are ignored. Keys:
 * omega, N, m, R, d, R_prime, model, lambda_csl, r_c, T, T_i, P,
 * epsilon_re, epsilon_im, m_gas. Only `model` is required. Geometry keys
 * default to the GRW column of the reference parameter table; R_prime
 * defaults to the equal-volume radius of (R, d). Keys belonging to a model
 * other than the selected one are rejected.
 */
Config load_config(std::string_view text);

/// Emit config text that `load_config` reads back to bit-identical values.
std::string serialize_config(const Config& config);

enum class Preset { Grw, Adler, Diosi };

/// Case-insensitive lookup of "grw", "adler" or "diosi".
std::optional<Preset> parse_preset(std::string_view name);

/// The three columns of the reference decay-rate table.
Config table1_preset(Preset preset);

} // namespace qdiscord
