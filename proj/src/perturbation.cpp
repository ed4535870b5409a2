#include "periflow/perturbation.hpp"

#include <cmath>
#include <sstream>

#include "periflow/hyperbolic.hpp"

namespace periflow {

namespace {

constexpr double kResonanceTol = 1e-12;   // relative, first-harmonic denominator
constexpr double kFTermTol = 1e-10;       // relative to e/k, f-term denominators
constexpr double kDegenerateQTol = 1e-13; // |Q - 1| floor for the reflux root
constexpr double kCoshArgLimit = 700.0;   // cosh overflows just above this

const char* kFTermNames[6] = {
    "alpha+beta", "alpha-beta", "alpha+beta*", "alpha-beta*",
    "beta+beta*", "beta-beta*",
};

/// d^n/dy^n of A sinh(m y): A m^n sinh(m y) for even n, cosh for odd n.
Complex sinh_mode(Complex amplitude, Complex m, double y, int order) {
    Complex v = amplitude;
    for (int i = 0; i < order; ++i) v *= m;
    return v * (order % 2 == 0 ? std::sinh(m * y) : std::cosh(m * y));
}

/// d^n/dy^n of A cosh(m y).
Complex cosh_mode(Complex amplitude, Complex m, double y, int order) {
    Complex v = amplitude;
    for (int i = 0; i < order; ++i) v *= m;
    return v * (order % 2 == 0 ? std::cosh(m * y) : std::sinh(m * y));
}

}  // namespace

// ---------------------------------------------------------------------------
// Zeroth order
// ---------------------------------------------------------------------------

ZerothOrderFlow zeroth_order(const FlowParameters& p, double imposed_dp0) {
    validate(p);
    const double ek = p.porosity_e / p.darcy_k;
    const double q = std::sqrt(ek);
    ZerothOrderFlow z;
    z.C0 = q * std::cosh(q) + p.slip_s * ek * std::sinh(q);
    z.A0 = p.darcy_k * p.reynolds_R * imposed_dp0 / z.C0;
    z.imposed_dp0 = imposed_dp0;
    return z;
}

double zeroth_order_stream(const FlowParameters& p, double imposed_dp0, double y) {
    const ZerothOrderFlow z = zeroth_order(p, imposed_dp0);
    if (z.A0 == 0.0) return 0.0;
    const double q = std::sqrt(p.porosity_e / p.darcy_k);
    return z.A0 * (-z.C0 * y + std::sinh(q * y));
}

// ---------------------------------------------------------------------------
// First harmonic
// ---------------------------------------------------------------------------

Complex compute_beta(const FlowParameters& p) {
    validate(p);
    const Complex beta2(p.wave_number_alpha * p.wave_number_alpha +
                            p.porosity_e / p.darcy_k,
                        -p.wave_number_alpha * p.porosity_e * p.reynolds_R);
    return std::sqrt(beta2);  // principal branch, Re >= 0
}

namespace detail {

FirstOrderCoefficients coeffs_for_beta(const FlowParameters& p, Complex beta) {
    const double a = p.wave_number_alpha;
    const double s = p.slip_s;
    const double sha = std::sinh(a), cha = std::cosh(a);
    const Complex shb = std::sinh(beta), chb = std::cosh(beta);

    const Complex t1 = a * cha * shb;
    const Complex t2 = -beta * sha * chb;
    const Complex t3 = s * (a * a - beta * beta) * sha * shb;
    const Complex den = t1 + t2 + t3;
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (std::abs(den) < kResonanceTol * scale) {
        std::ostringstream os;
        os << "first-harmonic denominator is resonant (|den| = " << std::abs(den)
           << ", scale = " << scale
           << "); perturb alpha, e, k or R away from the degenerate set";
        throw ResonanceError(os.str());
    }

    FirstOrderCoefficients c;
    c.alpha = a;
    c.beta = beta;
    c.c11 = -(beta * chb + s * beta * beta * shb) / den;
    c.c12 = (a * cha + s * a * a * sha) / den;
    return c;
}

}  // namespace detail

FirstOrderCoefficients first_order_coeffs(const FlowParameters& p) {
    return detail::coeffs_for_beta(p, compute_beta(p));
}

Complex phi1(const FirstOrderCoefficients& c, double y) {
    return phi1_derivative(c, y, 0);
}

Complex phi1_derivative(const FirstOrderCoefficients& c, double y, int order) {
    if (order < 0 || order > 4) {
        throw Error("phi1_derivative: order must be in [0, 4]");
    }
    return sinh_mode(c.c11, Complex(c.alpha), y, order) +
           sinh_mode(c.c12, c.beta, y, order);
}

Complex compute_D_complex(const FlowParameters& p, const FirstOrderCoefficients& c) {
    const double a = c.alpha;
    const double s = p.slip_s;
    const Complex b = c.beta, bs = std::conj(c.beta);
    const Complex c12s = std::conj(c.c12);
    const Complex two_re_c11 = c.c11 + std::conj(c.c11);

    const Complex sinh_part = a * a * two_re_c11 * std::sinh(a) +
                              b * b * c.c12 * std::sinh(b) +
                              bs * bs * c12s * std::sinh(bs);
    const Complex cosh_part = a * a * a * two_re_c11 * std::cosh(a) +
                              b * b * b * c.c12 * std::cosh(b) +
                              bs * bs * bs * c12s * std::cosh(bs);
    return -0.5 * (sinh_part + s * cosh_part);
}

double compute_D(const FlowParameters& p, const FirstOrderCoefficients& c) {
    return compute_D_complex(p, c).real();
}

// ---------------------------------------------------------------------------
// Mean flow
// ---------------------------------------------------------------------------

MeanFlowSolution::MeanFlowSolution(const FlowParameters& p, double dp2_mean)
    : MeanFlowSolution(p, first_order_coeffs(p), dp2_mean) {}

MeanFlowSolution::MeanFlowSolution(const FlowParameters& p,
                                   const FirstOrderCoefficients& c, double dp2_mean)
    : params_(validate(p)), coeffs_(c), dp2_(dp2_mean) {
    const double a = c.alpha;
    const double e = p.porosity_e, k = p.darcy_k, R = p.reynolds_R;
    const double ek = e / k;
    q_ = std::sqrt(ek);

    const Complex b = c.beta, bs = std::conj(c.beta);
    const Complex c11s = std::conj(c.c11), c12s = std::conj(c.c12);
    const Complex iaeR(0.0, a * e * R);
    const Complex pref = -iaeR / 4.0;

    const Complex coef[3] = {
        (iaeR - ek) * c11s * c.c12,
        (iaeR + ek) * c.c11 * c12s,
        2.0 * iaeR * c.c12 * c12s,
    };
    const Complex wn[6] = {a + b, a - b, a + bs, a - bs, b + bs, b - bs};

    for (int j = 0; j < 6; ++j) {
        const Complex m = wn[j];
        const Complex den = m * m - ek;
        if (std::abs(den) < kFTermTol * ek) {
            std::ostringstream os;
            os << "mean-flow term " << kFTermNames[j]
               << " is resonant: |(" << kFTermNames[j] << ")^2 - e/k| = "
               << std::abs(den) << " with e/k = " << ek
               << "; perturb the parameters away from the removable resonance";
            throw ResonanceError(os.str());
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        terms_[j].amplitude = sign * pref * coef[j / 2] / den;
        terms_[j].wavenumber = m;
        if (std::abs(m.real()) > kCoshArgLimit) {
            throw SolverError("mean-flow hyperbolic argument exceeds the double-"
                              "precision range; parameters are outside the "
                              "supported regime");
        }
    }
    f1_ = f(1.0, 0);
    f1p_ = f(1.0, 1);
    D_ = compute_D(p, c);
}

Complex MeanFlowSolution::f_complex(double y, int order) const {
    Complex tot(0.0);
    for (const FTerm& t : terms_) {
        tot += cosh_mode(t.amplitude, t.wavenumber, y, order);
    }
    return tot;
}

double MeanFlowSolution::f(double y, int order) const {
    return f_complex(y, order).real();
}

double MeanFlowSolution::phi20_prime(double y, int order) const {
    const double s = params_.slip_s;
    const double c20_term =
        2.0 * dp2_ * params_.darcy_k * params_.reynolds_R;  // 2 C20 k / e
    const double hom = D_ - f1_ - s * f1p_ + c20_term;
    double qpow = 1.0;
    for (int i = 0; i < order; ++i) qpow *= q_;
    const double ratio = (order % 2 == 0) ? wall_cosh_ratio(q_, y, s)
                                          : wall_sinh_ratio(q_, y, s);
    double v = f(y, order) + hom * qpow * ratio;
    if (order == 0) v -= c20_term;
    return v;
}

double MeanFlowSolution::mean_velocity(double y) const {
    const double eps = params_.amplitude_ratio_eps;
    return 0.5 * eps * eps * phi20_prime(y, 0);
}

double MeanFlowSolution::G(double y, int order) const {
    const double s = params_.slip_s;
    const double wall = f1_ + s * f1p_;
    double qpow = 1.0;
    for (int i = 0; i < order; ++i) qpow *= q_;
    const double ratio = (order % 2 == 0) ? wall_cosh_ratio(q_, y, s)
                                          : wall_sinh_ratio(q_, y, s);
    return f(y, order) - wall * qpow * ratio;
}

double MeanFlowSolution::F(double y) const {
    const double a = params_.wave_number_alpha, R = params_.reynolds_R;
    return -200.0 / (a * a * R * R) * G(y, 0);
}

double MeanFlowSolution::forcing(double y) const {
    return mean_flow_forcing(params_, coeffs_, y);
}

double mean_flow_forcing(const FlowParameters& p, const FirstOrderCoefficients& c,
                         double y) {
    const double a = c.alpha;
    const double e = p.porosity_e, k = p.darcy_k, R = p.reynolds_R;
    const double ek = e / k;
    const Complex b = c.beta, bs = std::conj(c.beta);
    const Complex c11s = std::conj(c.c11), c12s = std::conj(c.c12);
    const Complex iaeR(0.0, a * e * R);

    const Complex sha = std::sinh(Complex(a) * y);
    const Complex shb = std::sinh(b * y);
    const Complex shbs = std::sinh(bs * y);
    const Complex bracket = (iaeR - ek) * c11s * c.c12 * sha * shb +
                            (iaeR + ek) * c.c11 * c12s * sha * shbs +
                            2.0 * iaeR * c.c12 * c12s * shb * shbs;
    return (-iaeR / 2.0 * bracket).real();
}

double f_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y) {
    return MeanFlowSolution(p, c, 0.0).f(y, 0);
}

double phi20_prime(const FlowParameters& p, double dp2_mean, double y) {
    return MeanFlowSolution(p, dp2_mean).phi20_prime(y, 0);
}

double mean_velocity(const FlowParameters& p, double dp2_mean, double y) {
    return MeanFlowSolution(p, dp2_mean).mean_velocity(y);
}

double G_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y) {
    return MeanFlowSolution(p, c, 0.0).G(y, 0);
}

double F_of_y(const FlowParameters& p, const FirstOrderCoefficients& c, double y) {
    return MeanFlowSolution(p, c, 0.0).F(y);
}

double critical_reflux_pressure(const FlowParameters& p) {
    const MeanFlowSolution m(p, 0.0);
    const double s = p.slip_s;
    const double q = std::sqrt(p.porosity_e / p.darcy_k);
    const double qm1 = wall_q_minus_one(q, s);
    if (!(std::abs(qm1) > kDegenerateQTol)) {
        std::ostringstream os;
        os << "reflux condition degenerates: Q - 1 = " << qm1
           << " (darcy_k effectively infinite with zero slip)";
        throw DegenerateGeometryError(os.str());
    }
    const double inv_q = wall_inv_q(q, s);
    const double f0 = m.f(0.0, 0);
    const double wall = m.D() - m.f(1.0, 0) - s * m.f(1.0, 1);
    // (f0 Q + wall) / (2 k R (Q - 1)), divided through by Q for large-q safety;
    // (Q - 1)/Q is evaluated in its own cancellation-free form
    return (f0 + wall * inv_q) /
           (2.0 * p.darcy_k * p.reynolds_R * wall_qm1_over_q(q, s));
}

}  // namespace periflow
