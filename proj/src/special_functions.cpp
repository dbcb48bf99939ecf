#include "qdiscord/special_functions.hpp"

#include <cmath>
#include <string>

#include "qdiscord/constants.hpp"
#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

void check_argument(double z, const char* name)
{
    if (!std::isfinite(z) || z < 0) {
        throw DomainError(std::string(name) + ": argument must be finite and >= 0, got " +
                          std::to_string(z));
    }
}

// sum_k (z/2)^{2k + nu} / (k! (k + nu)!) for nu = 0, 1; all terms positive.
double power_series(double z, int nu)
{
    const double q = 0.25 * z * z;
    double term = nu == 0 ? 1.0 : 0.5 * z;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return sum;
}

// Hankel expansion e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(nu) / z^k,
// truncated at the smallest term.
double asymptotic_series(double z, int nu)
{
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (k * 8.0 * z);
        if (std::abs(next) >= std::abs(term)) {
            break;
        }
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum / std::sqrt(2.0 * kPi * z);
}

} // namespace

namespace detail {

double bessel_i0e_series(double z) { return std::exp(-z) * power_series(z, 0); }
double bessel_i1e_series(double z) { return std::exp(-z) * power_series(z, 1); }
double bessel_i0e_asymptotic(double z) { return asymptotic_series(z, 0); }
double bessel_i1e_asymptotic(double z) { return asymptotic_series(z, 1); }

} // namespace detail

double bessel_i0e(double z)
{
    check_argument(z, "bessel_i0e");
    return z <= kBesselSwitch ? detail::bessel_i0e_series(z) : detail::bessel_i0e_asymptotic(z);
}

double bessel_i1e(double z)
{
    check_argument(z, "bessel_i1e");
    return z <= kBesselSwitch ? detail::bessel_i1e_series(z) : detail::bessel_i1e_asymptotic(z);
}

double gamma_perp(double x)
{
    if (!std::isfinite(x) || x <= 0) {
        throw DomainError("gamma_perp: argument must be finite and > 0, got " + std::to_string(x));
    }
    const double z = x * x;
    if (z < 1e-4) {
        // 1 - z/2 + 5 z^2/24 - 7 z^3/96 + O(z^4)
        return 1.0 + z * (-0.5 + z * (5.0 / 24.0 - z * (7.0 / 96.0)));
    }
    return 2.0 / z * (1.0 - (bessel_i0e(z) + bessel_i1e(z)));
}

} // namespace qdiscord
