#ifndef PERIFLOW_ORACLE_HPP
#define PERIFLOW_ORACLE_HPP

/**
 * @file oracle.hpp
 * @brief Independent finite-difference solutions of the governing
 *        perturbation equations, used to validate the closed forms.
 *
 * Two boundary value problems are discretized with second-order central
 * differences on a uniform grid and solved with a banded direct solver:
 *
 *  - first harmonic: (d2/dy2 - alpha^2 - e/k + i alpha e R)(d2/dy2 - alpha^2)
 *    phi1 = 0 with phi1(+-1) = +-1 and phi1'(+-1) = -+ s phi1''(+-1). The
 *    factored operator is solved as a coupled pair of second-order equations
 *    (v = (d2/dy2 - alpha^2) phi1), which keeps the conditioning at O(h^-2);
 *    eliminating into a single fourth-order band is roundoff-limited near
 *    n = 2000 in double precision.
 *
 *  - mean flow: w'' - (e/k) w = forcing(y) + 2 C20 for w = phi20', with
 *    w(+-1) -+ ... the Robin pair w(-1) - s w'(-1) = D, w(1) + s w'(1) = D.
 *    The forcing is built from the closed-form first-order coefficients
 *    (the only algebra shared with the closed-form path).
 *
 * Slip/Robin derivatives use one-sided 3-point stencils of order 2.
 */

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "periflow/params.hpp"
#include "periflow/perturbation.hpp"

namespace periflow {

/// Uniform grid on [-1, 1].
struct Grid1D {
    int n_points = 0;
    double spacing = 0.0;

    static Grid1D uniform(int n);
    double node(int i) const { return -1.0 + spacing * i; }
    std::vector<double> nodes() const;
};

struct SolverReport {
    double condition_estimate = 0.0;
    int pivot_swaps = 0;  // row interchanges during the banded factorization
    bool boundary_layer_resolved = true;
    std::string note;
};

struct BvpSolution {
    Grid1D grid;
    std::vector<Complex> values;
    std::array<double, 4> boundary_residuals{};
    SolverReport report;
};

/// FD solve of the first-harmonic problem. Requires n_points >= 201.
/// Throws SolverError when the condition estimate exceeds 1e14.
BvpSolution solve_phi1_bvp(const FlowParameters& p, const Grid1D& grid);

/// FD reconstruction of phi20'. The forcing and boundary constant D are
/// evaluated from the closed-form first-order coefficients at the nodes.
BvpSolution reconstruct_phi20_prime(const FlowParameters& p, double dp2_mean,
                                    const Grid1D& grid);

namespace detail {
/// Reconstruction with caller-supplied coefficients and wall constant
/// (tests drive the zero-forcing case through this hook).
BvpSolution reconstruct_phi20_prime(const FlowParameters& p,
                                    const FirstOrderCoefficients& c, double D,
                                    double dp2_mean, const Grid1D& grid);
}  // namespace detail

enum class Equation {
    first_harmonic,  // fourth-order complex problem for phi1
    mean_flow,       // second-order real problem for phi20'
};

/// Sup-norm residual of the named equation evaluated with the closed form's
/// analytic derivatives at n_samples Chebyshev-spaced points.
double residual_scan(const FlowParameters& p, double dp2_mean, Equation eq,
                     int n_samples);

/// Residual of the first-harmonic equation for explicit (possibly perturbed)
/// coefficients.
double residual_first_harmonic(const FlowParameters& p,
                               const FirstOrderCoefficients& c, int n_samples);

/// Residual of the mean-flow equation for an explicit solution record.
double residual_mean_flow(const MeanFlowSolution& m, int n_samples);

}  // namespace periflow

#endif
