#include "periflow/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "periflow/banded.hpp"

namespace periflow {

namespace {

constexpr double kConditionLimit = 1e14;
constexpr int kBoundaryLayerCells = 5;

void check_boundary_layer(const FlowParameters& p, const Grid1D& g,
                          SolverReport& report) {
    const double width = std::sqrt(p.darcy_k / p.porosity_e);
    if (width < kBoundaryLayerCells * g.spacing) {
        report.boundary_layer_resolved = false;
        std::ostringstream os;
        os << "wall boundary layer sqrt(k/e) = " << width << " is thinner than "
           << kBoundaryLayerCells << " grid cells (h = " << g.spacing
           << "); refine the grid before trusting the solution";
        report.note = os.str();
    }
}

void check_condition(double estimate) {
    if (!(estimate < kConditionLimit)) {
        std::ostringstream os;
        os << "discretized system is ill-conditioned (growth estimate "
           << estimate << " exceeds " << kConditionLimit << ")";
        throw SolverError(os.str());
    }
}

}  // namespace

Grid1D Grid1D::uniform(int n) {
    if (n < 5) throw Error("Grid1D: need at least 5 points");
    Grid1D g;
    g.n_points = n;
    g.spacing = 2.0 / (n - 1);
    return g;
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> ys(n_points);
    for (int i = 0; i < n_points; ++i) ys[i] = node(i);
    ys.front() = -1.0;
    ys.back() = 1.0;
    return ys;
}

// ---------------------------------------------------------------------------
// First harmonic
// ---------------------------------------------------------------------------

BvpSolution solve_phi1_bvp(const FlowParameters& p, const Grid1D& grid) {
    validate(p);
    if (grid.n_points < 201) {
        throw Error("solve_phi1_bvp: need at least 201 grid points");
    }
    const int n = grid.n_points;
    const double h = grid.spacing;
    const double h2 = h * h;
    const double a = p.wave_number_alpha;
    const double s = p.slip_s;
    const Complex lambda(a * a + p.porosity_e / p.darcy_k,
                         -p.wave_number_alpha * p.porosity_e * p.reynolds_R);

    // Coupled pair: u'' - a^2 u = v, v'' = lambda v, unknowns interleaved
    // [u0, v0, u1, v1, ...]. Slip rows use u'' = a^2 u + v exactly plus a
    // one-sided 3-point u' stencil.
    const int N = 2 * n;
    BandedMatrix<Complex> A(N, 4, 4);
    std::vector<Complex> rhs(N, Complex(0.0));
    const auto U = [](int i) { return 2 * i; };
    const auto V = [](int i) { return 2 * i + 1; };

    // y = -1: u' - s u'' = 0
    A.add(0, U(0), Complex(-3.0 / (2.0 * h) - s * a * a));
    A.add(0, V(0), Complex(-s));
    A.add(0, U(1), Complex(4.0 / (2.0 * h)));
    A.add(0, U(2), Complex(-1.0 / (2.0 * h)));
    // u(-1) = -1
    A.add(1, U(0), Complex(1.0));
    rhs[1] = Complex(-1.0);

    for (int i = 1; i < n - 1; ++i) {
        A.add(U(i), U(i - 1), Complex(1.0 / h2));
        A.add(U(i), U(i), Complex(-2.0 / h2 - a * a));
        A.add(U(i), U(i + 1), Complex(1.0 / h2));
        A.add(U(i), V(i), Complex(-1.0));

        A.add(V(i), V(i - 1), Complex(1.0 / h2));
        A.add(V(i), V(i), Complex(-2.0 / h2) - lambda);
        A.add(V(i), V(i + 1), Complex(1.0 / h2));
    }

    // y = +1: u' + s u'' = 0
    A.add(N - 2, U(n - 1), Complex(3.0 / (2.0 * h) + s * a * a));
    A.add(N - 2, V(n - 1), Complex(s));
    A.add(N - 2, U(n - 2), Complex(-4.0 / (2.0 * h)));
    A.add(N - 2, U(n - 3), Complex(1.0 / (2.0 * h)));
    // u(+1) = +1
    A.add(N - 1, U(n - 1), Complex(1.0));
    rhs[N - 1] = Complex(1.0);

    BvpSolution sol;
    sol.grid = grid;
    check_boundary_layer(p, grid, sol.report);

    const std::vector<Complex> x = A.solve(std::move(rhs),
                                           &sol.report.condition_estimate,
                                           &sol.report.pivot_swaps);
    check_condition(sol.report.condition_estimate);

    sol.values.resize(n);
    for (int i = 0; i < n; ++i) sol.values[i] = x[U(i)];

    // residuals of the imposed boundary rows, recomputed from the solution
    const auto& u = sol.values;
    const Complex du_l = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    const Complex ddu_l = a * a * u[0] + x[V(0)];
    const Complex du_r =
        (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
    const Complex ddu_r = a * a * u[n - 1] + x[V(n - 1)];
    sol.boundary_residuals = {
        std::abs(u[0] + 1.0),
        std::abs(u[n - 1] - 1.0),
        std::abs(du_l - s * ddu_l),
        std::abs(du_r + s * ddu_r),
    };
    return sol;
}

// ---------------------------------------------------------------------------
// Mean flow
// ---------------------------------------------------------------------------

namespace detail {

BvpSolution reconstruct_phi20_prime(const FlowParameters& p,
                                    const FirstOrderCoefficients& c, double D,
                                    double dp2_mean, const Grid1D& grid) {
    validate(p);
    const int n = grid.n_points;
    const double h = grid.spacing;
    const double h2 = h * h;
    const double s = p.slip_s;
    const double ek = p.porosity_e / p.darcy_k;
    const double two_c20 =
        2.0 * p.porosity_e * p.reynolds_R * dp2_mean;  // 2 C20

    BandedMatrix<double> A(n, 2, 2);
    std::vector<double> rhs(n, 0.0);

    // w(-1) - s w'(-1) = D
    A.add(0, 0, 1.0 + s * 3.0 / (2.0 * h));
    A.add(0, 1, -s * 4.0 / (2.0 * h));
    A.add(0, 2, s * 1.0 / (2.0 * h));
    rhs[0] = D;

    for (int i = 1; i < n - 1; ++i) {
        A.add(i, i - 1, 1.0 / h2);
        A.add(i, i, -2.0 / h2 - ek);
        A.add(i, i + 1, 1.0 / h2);
        rhs[i] = mean_flow_forcing(p, c, grid.node(i)) + two_c20;
    }

    // w(+1) + s w'(+1) = D
    A.add(n - 1, n - 1, 1.0 + s * 3.0 / (2.0 * h));
    A.add(n - 1, n - 2, -s * 4.0 / (2.0 * h));
    A.add(n - 1, n - 3, s * 1.0 / (2.0 * h));
    rhs[n - 1] = D;

    BvpSolution sol;
    sol.grid = grid;
    check_boundary_layer(p, grid, sol.report);

    const std::vector<double> w = A.solve(std::move(rhs),
                                          &sol.report.condition_estimate,
                                          &sol.report.pivot_swaps);
    check_condition(sol.report.condition_estimate);

    sol.values.assign(w.begin(), w.end());
    const double dw_l = (-3.0 * w[0] + 4.0 * w[1] - w[2]) / (2.0 * h);
    const double dw_r = (3.0 * w[n - 1] - 4.0 * w[n - 2] + w[n - 3]) / (2.0 * h);
    sol.boundary_residuals = {
        std::abs(w[0] - s * dw_l - D),
        std::abs(w[n - 1] + s * dw_r - D),
        0.0,
        0.0,
    };
    return sol;
}

}  // namespace detail

BvpSolution reconstruct_phi20_prime(const FlowParameters& p, double dp2_mean,
                                    const Grid1D& grid) {
    const FirstOrderCoefficients c = first_order_coeffs(p);
    return detail::reconstruct_phi20_prime(p, c, compute_D(p, c), dp2_mean, grid);
}

// ---------------------------------------------------------------------------
// Residual scans
// ---------------------------------------------------------------------------

namespace {

std::vector<double> chebyshev_points(int n) {
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) {
        ys[i] = std::cos(std::numbers::pi * i / (n - 1));
    }
    return ys;
}

}  // namespace

double residual_first_harmonic(const FlowParameters& p,
                               const FirstOrderCoefficients& c, int n_samples) {
    validate(p);
    const double a = p.wave_number_alpha;
    const Complex lambda(a * a + p.porosity_e / p.darcy_k,
                         -a * p.porosity_e * p.reynolds_R);
    double worst = 0.0;
    for (double y : chebyshev_points(n_samples)) {
        const Complex r = phi1_derivative(c, y, 4) -
                          (a * a + lambda) * phi1_derivative(c, y, 2) +
                          a * a * lambda * phi1_derivative(c, y, 0);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double residual_mean_flow(const MeanFlowSolution& m, int n_samples) {
    const FlowParameters& p = m.params();
    const double ek = p.porosity_e / p.darcy_k;
    const double two_c20 = 2.0 * p.porosity_e * p.reynolds_R * m.dp2_mean();
    double worst = 0.0;
    for (double y : chebyshev_points(n_samples)) {
        const double r = m.phi20_prime(y, 2) - ek * m.phi20_prime(y, 0) -
                         m.forcing(y) - two_c20;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double residual_scan(const FlowParameters& p, double dp2_mean, Equation eq,
                     int n_samples) {
    if (eq == Equation::first_harmonic) {
        return residual_first_harmonic(p, first_order_coeffs(p), n_samples);
    }
    return residual_mean_flow(MeanFlowSolution(p, dp2_mean), n_samples);
}

}  // namespace periflow
