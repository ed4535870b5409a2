#ifndef PERIFLOW_HYPERBOLIC_HPP
#define PERIFLOW_HYPERBOLIC_HPP

/**
 * @file hyperbolic.hpp
 * @brief Overflow-safe evaluation of the wall hyperbolic ratios.
 *
 * The mean-flow fields repeatedly use cosh(q y)/Q and sinh(q y)/Q with
 * q = sqrt(e/k) and Q = cosh q + s q sinh q. Written naively these overflow
 * once q exceeds ~700; factoring exp(q) out of numerator and denominator
 * gives forms whose exponents are all non-positive for |y| <= 1, valid for
 * every q >= 0.
 */

#include <cmath>

namespace periflow {

/// Q(q, s) - 1 without cancellation near q = 0.
/// Q - 1 = e^q [ expm1(-q)^2 + s q (-expm1(-2q)) ] / 2.
inline double wall_q_minus_one(double q, double s) {
    const double em = std::expm1(-q);
    const double em2 = -std::expm1(-2.0 * q);
    return std::exp(q) * (em * em + s * q * em2) / 2.0;
}

/// Q(q, s) = cosh q + s q sinh q.
inline double wall_q(double q, double s) {
    return wall_q_minus_one(q, s) + 1.0;
}

/// 1 / Q, stable for arbitrarily large q (underflows to 0).
inline double wall_inv_q(double q, double s) {
    const double e2 = std::exp(-2.0 * q);
    return 2.0 * std::exp(-q) / ((1.0 + e2) + s * q * (1.0 - e2));
}

/// (Q - 1) / Q, bounded and cancellation-free for every q >= 0.
inline double wall_qm1_over_q(double q, double s) {
    const double em = std::expm1(-q);
    const double e2 = std::exp(-2.0 * q);
    return (em * em + s * q * (1.0 - e2)) / ((1.0 + e2) + s * q * (1.0 - e2));
}

/// cosh(q y) / Q for |y| <= 1; exponents all <= 0 after factoring exp(q).
inline double wall_cosh_ratio(double q, double y, double s) {
    const double e2 = std::exp(-2.0 * q);
    const double den = (1.0 + e2) + s * q * (1.0 - e2);
    return (std::exp(q * (y - 1.0)) + std::exp(-q * (y + 1.0))) / den;
}

/// sinh(q y) / Q for |y| <= 1.
inline double wall_sinh_ratio(double q, double y, double s) {
    const double e2 = std::exp(-2.0 * q);
    const double den = (1.0 + e2) + s * q * (1.0 - e2);
    return (std::exp(q * (y - 1.0)) - std::exp(-q * (y + 1.0))) / den;
}

}  // namespace periflow

#endif
