#ifndef PERIFLOW_TESTS_CHANNEL_LIMIT_HPP
#define PERIFLOW_TESTS_CHANNEL_LIMIT_HPP

// Test-only evaluator of the classical non-porous, no-slip channel limit
// (porosity 1, slip 0, Darcy number -> infinity). Written directly from the
// limit formulas, independent of the library's evaluation path:
//   beta^2   = alpha^2 - i alpha R
//   C11      = -beta cosh beta / den,  C12 = alpha cosh alpha / den,
//   den      = alpha cosh alpha sinh beta - beta sinh alpha cosh beta
//   D        = -(1/2)[alpha^2 (C11+C11*) sinh alpha + beta^2 C12 sinh beta + c.c.]
//   f(y)     = -(i alpha R/4)[ i alpha R C11* C12 {cosh((a+b)y)/(a+b)^2
//              - cosh((a-b)y)/(a-b)^2} + (conjugate pair) + 2 i alpha R |C12|^2
//              {cosh((b+b*)y)/(b+b*)^2 - cosh((b-b*)y)/(b-b*)^2} ]
//   F(y)     = -200/(alpha^2 R^2) (f(y) - f(1))
//   ubar(y)  = (eps^2/2)(f(y) + D - f(1) - R dp2 (1 - y^2))
//   critical = (f(0) + D - f(1)) / R

#include <array>
#include <complex>

namespace channel_limit {

using C = std::complex<double>;

struct Limit {
    double alpha, R;
    C beta, c11, c12;
    double D;
    std::array<std::pair<C, C>, 6> terms;  // (amplitude, wavenumber)

    Limit(double alpha_, double R_) : alpha(alpha_), R(R_) {
        const double a = alpha;
        beta = std::sqrt(C(a * a, -a * R));
        const C den = a * std::cosh(a) * std::sinh(beta) -
                      beta * std::sinh(a) * std::cosh(beta);
        c11 = -beta * std::cosh(beta) / den;
        c12 = a * std::cosh(a) / den;
        const C bs = std::conj(beta);
        const C c11s = std::conj(c11), c12s = std::conj(c12);
        D = (-0.5 * (a * a * (c11 + c11s) * std::sinh(a) +
                     beta * beta * c12 * std::sinh(beta) +
                     bs * bs * c12s * std::sinh(bs)))
                .real();
        const C iaR(0.0, a * R);
        const C pref = -iaR / 4.0;
        const C coef[3] = {iaR * c11s * c12, iaR * c11 * c12s,
                           2.0 * iaR * c12 * c12s};
        const C wn[6] = {a + beta, a - beta, a + bs, a - bs, beta + bs,
                         beta - bs};
        for (int j = 0; j < 6; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            terms[j] = {sign * pref * coef[j / 2] / (wn[j] * wn[j]), wn[j]};
        }
    }

    double f(double y) const {
        C tot(0.0);
        for (const auto& [amp, m] : terms) tot += amp * std::cosh(m * y);
        return tot.real();
    }

    double F(double y) const {
        return -200.0 / (alpha * alpha * R * R) * (f(y) - f(1.0));
    }

    double mean_velocity(double y, double eps, double dp2) const {
        return 0.5 * eps * eps *
               (f(y) + D - f(1.0) - R * dp2 * (1.0 - y * y));
    }

    double critical_pressure() const { return (f(0.0) + D - f(1.0)) / R; }
};

}  // namespace channel_limit

#endif
