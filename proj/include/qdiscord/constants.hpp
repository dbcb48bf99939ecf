#pragma once

namespace qdiscord {

//---------------------------------------------------------------------------//
/*!
 * Physical constants in SI units (CODATA 2018).
 *
 * Constant | Unit          | Notes
 * -------- | ------------- | -------------------------------------
 * hbar     | J s           | reduced Planck constant
 * G        | m^3 kg^-1 s^-2| Newtonian constant of gravitation
 * k_B      | J K^-1        | Boltzmann constant
 * c        | m s^-1        | speed of light in vacuum
 * m0       | kg            | nucleon reference mass (proton mass)
 * amu      | kg            | atomic mass unit
 */
struct PhysicalConstants {
    double hbar = 1.054571817e-34;
    double G = 6.67430e-11;
    double k_B = 1.380649e-23;
    double c = 299792458.0;
    double m0 = 1.67262192369e-27;
    double amu = 1.66053906660e-27;
};

inline constexpr PhysicalConstants kConstants{};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

//! Riemann zeta values used by the radiative and collisional rates.
struct ZetaConstants {
    double zeta9 = 1.0020083928260822144;
    double zeta3 = 1.2020569031595942854;
    double zeta3_half = 2.6123753486854883433;
};

inline constexpr ZetaConstants kZeta{};

} // namespace qdiscord
