#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qdiscord {

using Complex = std::complex<double>;

/*!
 * Two-mode density matrix over the basis
 *
 *   0 = |0_L 0_R>, 1 = |1_L 0_R>, 2 = |0_L 1_R>, 3 = |1_L 1_R>,
 *
 * i.e. basis index = n_L + 2 n_R. Indices are zero-based throughout.
 */
class DensityMatrix4 {
public:
    using Matrix = Eigen::Matrix4cd;

    DensityMatrix4() : m_(Matrix::Zero()) {}
    explicit DensityMatrix4(const Matrix& m) : m_(m) {}

    Complex operator()(int i, int j) const { return m_(i, j); }
    Complex& operator()(int i, int j) { return m_(i, j); }

    const Matrix& matrix() const { return m_; }

    double trace() const { return m_.trace().real(); }
    double purity() const { return (m_ * m_).trace().real(); }

    /// max |rho_ij - conj(rho_ji)|
    double hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

    /// Eigenvalues from a dense Hermitian eigensolve, ascending.
    std::array<double, 4> dense_eigenvalues() const;

private:
    Matrix m_;
};

inline double max_abs_diff(const DensityMatrix4& a, const DensityMatrix4& b)
{
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

struct EvolutionInputs {
    double lambda_big = 0.0; //!< decay-rate constant [1/s]
    double omega = 1.0;      //!< phonon angular frequency [rad/s]
    double t = 0.0;          //!< time [s]

    void validate() const;
};

/// Below this Lambda/omega the oscillating terms are dropped (see EvalMode).
inline constexpr double kEnvelopeRatio = 1e-9;

enum class EvalMode {
    Auto,  //!< envelope evaluation when Lambda/omega < kEnvelopeRatio
    Exact, //!< always evaluate the full closed form
};

/// True when closed_form_state would use the envelope evaluation.
bool uses_envelope(double lambda_big, double omega, EvalMode mode = EvalMode::Auto);

/// (|1_L 0_R> + |0_L 1_R>)/sqrt(2) as a density matrix.
DensityMatrix4 initial_state();

/*!
 * Exact solution of the two-mode master equation started from
 * initial_state(). With s^2 = Lambda^2 - 4 omega^2 and E = e^{-Lambda t}:
 *
 *   rho00 = rho33 = (1 - E^2)/4,   rho11 = rho22 = (1 + E^2)/4,
 *   rho12 = rho21 = E/2 + Lambda^2 E (cosh(st) - 1) / (2 s^2),
 *   Re rho03 = (Lambda/2) E sinh(st)/s,
 *   Im rho03 = omega Lambda E (cosh(st) - 1) / s^2,
 *   rho30 = conj(rho03).
 *
 * The s-dependent factors are evaluated as entire functions of s^2 t^2 so
 * the critical point Lambda = 2 omega and the underdamped regime (s
 * imaginary) need no special handling. In envelope mode rho03 = 0 and
 * rho12 = E/2; the dropped terms are bounded by Lambda/omega.
 */
DensityMatrix4 closed_form_state(const EvolutionInputs& in, EvalMode mode = EvalMode::Auto);

/// Right-hand side of the master equation,
/// -i omega [n, rho] - (Lambda/2) (2 rho - X_L rho X_L - X_R rho X_R),
/// written out entry by entry.
DensityMatrix4::Matrix generator(const DensityMatrix4::Matrix& rho, double lambda_big, double omega);

struct IntegrationResult {
    DensityMatrix4 state;
    double error_estimate = 0.0; //!< max elementwise change when the step is halved
};

/*!
 * Fixed-step classical fourth-order Runge-Kutta integration of generator()
 * from initial_state() to in.t. Runs with `steps` and with 2*steps; returns
 * the finer result and the elementwise difference as error estimate. When
 * `tolerance` is positive and the estimate exceeds it, throws
 * ConvergenceError.
 */
IntegrationResult numerical_state(const EvolutionInputs& in, int steps, double tolerance = 0.0);

/// Step count giving h * (2 Lambda + 2 omega) <= 0.01, at least 1.
int default_step_count(const EvolutionInputs& in);

/*!
 * The four eigenvalues rho11 - rho12, rho11 + rho12, rho00 - |rho03|,
 * rho00 + |rho03| of an X-shaped state. Values within 1e-10 below zero are
 * clamped to 0 (and likewise above 1). States with any other non-zero
 * entries fall back to a dense eigensolve.
 */
std::array<double, 4> spectrum(const DensityMatrix4& rho);

} // namespace qdiscord
