#include "periflow/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "periflow/csv.hpp"
#include "periflow/oracle.hpp"
#include "periflow/perturbation.hpp"

namespace periflow {

namespace {

double sup_dev_first_harmonic(const FlowParameters& p, const Grid1D& grid) {
    const BvpSolution sol = solve_phi1_bvp(p, grid);
    const FirstOrderCoefficients c = first_order_coeffs(p);
    double worst = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        worst = std::max(worst, std::abs(sol.values[i] - phi1(c, grid.node(i))));
    }
    return worst;
}

double sup_dev_mean_flow(const FlowParameters& p, double dp2, const Grid1D& grid) {
    const BvpSolution sol = reconstruct_phi20_prime(p, dp2, grid);
    const MeanFlowSolution m(p, dp2);
    double worst = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        worst = std::max(worst,
                         std::abs(sol.values[i].real() - m.phi20_prime(grid.node(i))));
    }
    return worst;
}

struct StructuralWorst {
    double parity_odd = 0.0;
    double parity_even = 0.0;
    double im_d = 0.0;
    double im_f = 0.0;
    double branch = 0.0;
    double first_bc = 0.0;
    double wall_identity = 0.0;
};

void structural_checks(const FlowParameters& p, double dp2, StructuralWorst& w) {
    const FirstOrderCoefficients c = first_order_coeffs(p);
    const MeanFlowSolution m(p, c, dp2);
    const FirstOrderCoefficients cflip = detail::coeffs_for_beta(p, -c.beta);
    const MeanFlowSolution mflip(p, cflip, dp2);

    w.im_d = std::max(w.im_d, std::abs(compute_D_complex(p, c).imag()));
    w.branch = std::max(w.branch, std::abs(compute_D(p, c) - compute_D(p, cflip)));

    for (int i = 0; i <= 20; ++i) {
        const double y = i / 20.0;
        w.parity_odd = std::max(w.parity_odd, std::abs(phi1(c, y) + phi1(c, -y)));
        w.parity_even = std::max({w.parity_even,
                                  std::abs(m.f(y) - m.f(-y)),
                                  std::abs(m.phi20_prime(y) - m.phi20_prime(-y)),
                                  std::abs(m.mean_velocity(y) - m.mean_velocity(-y)),
                                  std::abs(m.G(y) - m.G(-y)),
                                  std::abs(m.F(y) - m.F(-y))});
        w.im_f = std::max(w.im_f, std::abs(m.f_complex(y).imag()));
        w.branch = std::max({w.branch,
                             std::abs(phi1(c, y) - phi1(cflip, y)),
                             std::abs(m.f(y) - mflip.f(y)),
                             std::abs(m.mean_velocity(y) - mflip.mean_velocity(y))});
    }

    const double s = p.slip_s;
    w.first_bc = std::max({w.first_bc,
                           std::abs(phi1(c, 1.0) - 1.0),
                           std::abs(phi1(c, -1.0) + 1.0),
                           std::abs(phi1_derivative(c, 1.0, 1) +
                                    s * phi1_derivative(c, 1.0, 2)),
                           std::abs(phi1_derivative(c, -1.0, 1) -
                                    s * phi1_derivative(c, -1.0, 2))});
    // identity residual normalized by the dominant pressure term, which can
    // reach ~1e6 on the draw ranges
    const double wall_scale =
        std::max(1.0, std::abs(2.0 * dp2 * p.darcy_k * p.reynolds_R));
    w.wall_identity = std::max(
        w.wall_identity,
        std::abs(m.phi20_prime(1.0, 0) + s * m.phi20_prime(1.0, 1) - m.D()) /
            wall_scale);
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

VerifyCheck make_check(std::string name, double measured, double tol,
                       const char* rel = "<") {
    VerifyCheck c;
    c.name = std::move(name);
    c.measured = measured;
    std::ostringstream os;
    os << rel << " " << tol;
    c.criterion = os.str();
    c.passed = measured < tol;
    return c;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) {
        return c.passed || c.skipped;
    });
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << std::left << std::setw(44) << "check" << std::setw(14) << "measured"
       << std::setw(14) << "criterion" << "status\n";
    os << std::string(80, '-') << "\n";
    for (const VerifyCheck& c : checks) {
        os << std::left << std::setw(44) << c.name << std::setw(14)
           << short_num(c.measured) << std::setw(14) << c.criterion
           << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL"));
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    return os.str();
}

std::vector<std::pair<FlowParameters, double>> verification_draws(int count,
                                                                  unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uR(1.0, 30.0), ua(0.1, 0.5),
        ue(0.5, 1.0), us(0.0, 0.01), udp(-3.0, 3.0), ueps(0.05, 0.3),
        ulogk(std::log10(0.05), 4.0);
    std::vector<std::pair<FlowParameters, double>> draws;
    draws.reserve(count);
    for (int i = 0; i < count; ++i) {
        FlowParameters p;
        p.reynolds_R = uR(rng);
        p.wave_number_alpha = ua(rng);
        p.porosity_e = ue(rng);
        p.darcy_k = std::pow(10.0, ulogk(rng));
        p.slip_s = us(rng);
        p.amplitude_ratio_eps = ueps(rng);
        draws.emplace_back(p, udp(rng));
    }
    return draws;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    const Grid1D grid = Grid1D::uniform(options.grid_points);

    std::vector<std::pair<FlowParameters, double>> draws;
    if (options.explicit_params) {
        draws.emplace_back(*options.explicit_params, options.explicit_dp2);
    } else {
        draws = verification_draws(options.draws, options.seed);
    }

    const double width =
        [&] {
            double w = std::numeric_limits<double>::infinity();
            for (const auto& [p, dp2] : draws) {
                (void)dp2;
                w = std::min(w, std::sqrt(p.darcy_k / p.porosity_e));
            }
            return w;
        }();
    const bool layer_resolved = width >= 5.0 * grid.spacing;

    double dev22 = 0.0, dev32 = 0.0, res22 = 0.0, res32 = 0.0;
    StructuralWorst sw;
    std::ostringstream csv;
    csv << "draw,R,alpha,e,k,s,dp2,fd_dev_first,fd_dev_mean,residual_first_rel,"
           "residual_mean\n";

    const int count = static_cast<int>(draws.size());
    std::vector<std::array<double, 4>> rows(count);
    std::string loop_error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            const auto& [p, dp2] = draws[i];
            double d22 = std::numeric_limits<double>::quiet_NaN();
            double d32 = std::numeric_limits<double>::quiet_NaN();
            if (layer_resolved) {
                d22 = sup_dev_first_harmonic(p, grid);
                d32 = sup_dev_mean_flow(p, dp2, grid);
            }
            const FirstOrderCoefficients c = first_order_coeffs(p);
            double scale = 0.0;
            for (int j = 0; j <= 20; ++j) {
                scale = std::max(scale, std::abs(phi1(c, -1.0 + j / 10.0)));
            }
            const double r22 =
                residual_first_harmonic(p, c, options.residual_samples) / scale;
            const double r32 = residual_mean_flow(MeanFlowSolution(p, c, dp2),
                                                  options.residual_samples);
            rows[i] = {d22, d32, r22, r32};
        } catch (const std::exception& ex) {
#pragma omp critical
            if (loop_error.empty()) loop_error = ex.what();
        }
    }
    if (!loop_error.empty()) {
        throw SolverError("verification draw failed: " + loop_error);
    }

    for (int i = 0; i < count; ++i) {
        const auto& [p, dp2] = draws[i];
        structural_checks(p, dp2, sw);
        if (layer_resolved) {
            dev22 = std::max(dev22, rows[i][0]);
            dev32 = std::max(dev32, rows[i][1]);
        }
        res22 = std::max(res22, rows[i][2]);
        res32 = std::max(res32, rows[i][3]);
        csv << i << "," << format_double(p.reynolds_R) << ","
            << format_double(p.wave_number_alpha) << ","
            << format_double(p.porosity_e) << "," << format_double(p.darcy_k)
            << "," << format_double(p.slip_s) << "," << format_double(dp2)
            << "," << format_double(rows[i][0]) << "," << format_double(rows[i][1])
            << "," << format_double(rows[i][2]) << "," << format_double(rows[i][3])
            << "\n";
    }

    VerifyCheck c22 = make_check("first-harmonic FD agreement (sup)", dev22, 1e-4);
    VerifyCheck c32 = make_check("mean-flow FD agreement (sup)", dev32, 1e-4);
    if (!layer_resolved) {
        c22.skipped = c32.skipped = true;
        std::ostringstream os;
        os << "boundary layer sqrt(k/e) = " << width << " thinner than 5 cells";
        c22.note = c32.note = os.str();
        c22.measured = c32.measured = 0.0;
    }
    report.checks.push_back(c22);
    report.checks.push_back(c32);
    report.checks.push_back(
        make_check("first-harmonic residual / scale", res22, 1e-9));
    report.checks.push_back(make_check("mean-flow residual (sup)", res32, 1e-8));
    report.checks.push_back(
        make_check("first-harmonic parity (odd)", sw.parity_odd, 1e-12));
    report.checks.push_back(
        make_check("mean-flow parity (even)", sw.parity_even, 1e-12));
    report.checks.push_back(make_check("Im D", sw.im_d, 1e-12));
    report.checks.push_back(make_check("Im f", sw.im_f, 1e-12));
    report.checks.push_back(
        make_check("branch invariance (beta -> -beta)", sw.branch, 1e-12));
    report.checks.push_back(
        make_check("first-harmonic boundary conditions", sw.first_bc, 1e-10));
    report.checks.push_back(
        make_check("mean-flow wall identity (scaled)", sw.wall_identity, 1e-10));

    // observed convergence order between n and (n-1)/2+1 grids, first draw
    if (layer_resolved && !draws.empty()) {
        const int n2 = options.grid_points;
        const int n1 = (n2 - 1) / 2 + 1;
        if (n1 >= 201) {
            const auto& [p, dp2] = draws.front();
            const double e1 = sup_dev_first_harmonic(p, Grid1D::uniform(n1));
            const double e2 = sup_dev_first_harmonic(p, Grid1D::uniform(n2));
            const double order1 = std::log2(e1 / e2);
            const double w1 = sup_dev_mean_flow(p, dp2, Grid1D::uniform(n1));
            const double w2 = sup_dev_mean_flow(p, dp2, Grid1D::uniform(n2));
            const double order2 = std::log2(w1 / w2);
            for (auto [name, order] :
                 {std::pair<const char*, double>{"first-harmonic convergence order",
                                                 order1},
                  {"mean-flow convergence order", order2}}) {
                VerifyCheck c;
                c.name = name;
                c.measured = order;
                c.criterion = "in [1.7, 2.3]";
                c.passed = order > 1.7 && order < 2.3;
                report.checks.push_back(c);
            }
        }
    }

    report.residuals_csv = csv.str();
    return report;
}

}  // namespace periflow
