#ifndef PERIFLOW_PERTURBATION_HPP
#define PERIFLOW_PERTURBATION_HPP

/**
 * @file perturbation.hpp
 * @brief Closed-form small-amplitude solution of peristaltic transport in a
 *        porous channel with Saffman wall slip.
 *
 * The stream function is expanded in powers of the amplitude ratio eps. With
 * no imposed zeroth-order pressure gradient the first harmonic is
 *
 *     phi1(y) = C11 sinh(alpha y) + C12 sinh(beta y),
 *     beta^2  = alpha^2 + e/k - i alpha e R,
 *
 * and the time-averaged (second-order) axial flow is carried by
 *
 *     phi20'(y) = f(y) + (D - f(1) - s f'(1)) cosh(q y)/Q
 *                 - 2 C20 k/e (1 - cosh(q y)/Q),
 *
 * with q = sqrt(e/k), Q = cosh q + s q sinh q, C20 = e R dp2_mean, f(y) a sum
 * of six cosh terms built from C11, C12, beta, and D the wall value of the
 * slip combination phi20' +- s phi20''. The mean axial velocity is
 * ubar = (eps^2/2) phi20'; G(y) and F(y) = -200/(alpha^2 R^2) G(y) isolate the
 * peristaltic perturbation of the mean flow; the critical reflux pressure is
 * the dp2_mean at which ubar(0) vanishes.
 *
 * Everything here is a pure function of immutable inputs; all records are
 * freely shareable across threads.
 */

#include <array>
#include <complex>

#include "periflow/params.hpp"

namespace periflow {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Zeroth order: porous Poiseuille flow under an imposed mean gradient
// ---------------------------------------------------------------------------

/// psi0(y) = A0 (-C0 y + sinh(q y)), with
/// C0 = q cosh q + (s e/k) sinh q and A0 = k R dp0 / C0.
struct ZerothOrderFlow {
    double A0 = 0.0;
    double C0 = 0.0;
    double imposed_dp0 = 0.0;
};

ZerothOrderFlow zeroth_order(const FlowParameters& p, double imposed_dp0);

/// psi0 at y (odd in y; identically zero when imposed_dp0 = 0).
double zeroth_order_stream(const FlowParameters& p, double imposed_dp0, double y);

// ---------------------------------------------------------------------------
// First harmonic
// ---------------------------------------------------------------------------

struct FirstOrderCoefficients {
    double alpha = 0.0;  // wavenumber of the sinh(alpha y) mode
    Complex beta;
    Complex c11;
    Complex c12;
};

/// Principal square root (Re >= 0) of alpha^2 + e/k - i alpha e R.
Complex compute_beta(const FlowParameters& p);

/// Coefficients of phi1 satisfying phi1(+-1) = +-1 and
/// phi1'(+-1) = -+ s phi1''(+-1).
/// Throws ResonanceError when the shared denominator degenerates.
FirstOrderCoefficients first_order_coeffs(const FlowParameters& p);

/// phi1(y); odd in y.
Complex phi1(const FirstOrderCoefficients& c, double y);

/// Analytic derivative of phi1 of the given order (0..4). No numerical
/// differentiation anywhere.
Complex phi1_derivative(const FirstOrderCoefficients& c, double y, int order);

/// Wall constant D = phi20'(+-1) +- s phi20''(+-1), a conjugate-symmetric
/// combination of the first-order coefficients; exactly real.
double compute_D(const FlowParameters& p, const FirstOrderCoefficients& c);

/// The same sum kept complex, for realness diagnostics.
Complex compute_D_complex(const FlowParameters& p, const FirstOrderCoefficients& c);

namespace detail {
/// Coefficients for a caller-supplied branch of beta (tests exercise the
/// beta -> -beta invariance and the resonance guard through this hook).
FirstOrderCoefficients coeffs_for_beta(const FlowParameters& p, Complex beta);
}  // namespace detail

// ---------------------------------------------------------------------------
// Mean flow
// ---------------------------------------------------------------------------

/// One cosh term of f(y): amplitude * cosh(wavenumber * y).
struct FTerm {
    Complex amplitude;
    Complex wavenumber;
};

/// All second-order mean-flow fields for one parameter set. Construction
/// precomputes the six f terms, the wall values f(1), f'(1) and D.
/// Immutable after construction; safe to share across threads.
class MeanFlowSolution {
public:
    MeanFlowSolution(const FlowParameters& p, double dp2_mean);
    MeanFlowSolution(const FlowParameters& p, const FirstOrderCoefficients& c,
                     double dp2_mean);

    const FlowParameters& params() const { return params_; }
    const FirstOrderCoefficients& coeffs() const { return coeffs_; }
    const std::array<FTerm, 6>& f_terms() const { return terms_; }
    double D() const { return D_; }
    double dp2_mean() const { return dp2_; }

    /// f(y) and its analytic derivatives (order 0..3). Real and even in y.
    double f(double y, int order = 0) const;
    /// The unsymmetrized complex sum behind f, for realness diagnostics.
    Complex f_complex(double y, int order = 0) const;

    /// phi20' and its derivatives: order 0 = phi20', 1 = phi20'', 2 = phi20'''.
    double phi20_prime(double y, int order = 0) const;

    /// ubar(y) = (eps^2 / 2) phi20'(y); even in y.
    double mean_velocity(double y) const;

    /// G(y) = f(y) - (f(1) + s f'(1)) cosh(q y)/Q, and dG/dy.
    double G(double y, int order = 0) const;

    /// F(y) = -200 / (alpha^2 R^2) G(y).
    double F(double y) const;

    /// Forcing of the mean-flow equation (everything except the 2 C20
    /// constant): phi20''' - (e/k) phi20' equals this plus 2 C20.
    double forcing(double y) const;

private:
    FlowParameters params_;
    FirstOrderCoefficients coeffs_;
    double dp2_ = 0.0;
    std::array<FTerm, 6> terms_{};
    double q_ = 0.0;   // sqrt(e/k)
    double f1_ = 0.0;  // f(1)
    double f1p_ = 0.0; // f'(1)
    double D_ = 0.0;
};

// Operation-shaped wrappers. Each builds the solution record it needs; batch
// callers (sweeps, profiles) should construct MeanFlowSolution once instead.

double f_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y);
double phi20_prime(const FlowParameters& p, double dp2_mean, double y);
double mean_velocity(const FlowParameters& p, double dp2_mean, double y);
double G_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y);
double F_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y);

/// Forcing of the mean-flow equation built directly from the first-order
/// coefficients (the only closed-form surface the FD reconstruction shares
/// with the mean-flow solution).
double mean_flow_forcing(const FlowParameters& p, const FirstOrderCoefficients& c,
                         double y);

/// The dp2_mean at which the centerline mean velocity vanishes:
///   (f(0) Q + D - f(1) - s f'(1)) / (2 k R (Q - 1)),
/// evaluated in 1/Q form so large q cannot overflow.
/// Throws DegenerateGeometryError when |Q - 1| falls below tolerance.
double critical_reflux_pressure(const FlowParameters& p);

}  // namespace periflow

#endif
