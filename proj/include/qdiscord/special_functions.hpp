#pragma once

namespace qdiscord {

/// Argument at which the scaled Bessel evaluators switch from the power
/// series to the large-argument asymptotic expansion.
inline constexpr double kBesselSwitch = 20.0;

/// e^{-z} I0(z) for z >= 0. Throws DomainError for negative or non-finite z.
double bessel_i0e(double z);

/// e^{-z} I1(z) for z >= 0. Throws DomainError for negative or non-finite z.
double bessel_i1e(double z);

namespace detail {
// Both branches are exposed so the switchover can be cross-validated.
double bessel_i0e_series(double z);
double bessel_i1e_series(double z);
double bessel_i0e_asymptotic(double z);
double bessel_i1e_asymptotic(double z);
} // namespace detail

/*!
 * Geometric form factor of a cylinder in the CSL rate,
 *
 *   (2/x^2) [1 - e^{-x^2} (I0(x^2) + I1(x^2))],
 *
 * evaluated with scaled Bessels so that large x^2 cannot overflow. Below
 * x^2 = 1e-4 a Taylor series is used. Result lies in (0, 1].
 */
double gamma_perp(double x);

} // namespace qdiscord
