#ifndef PERIFLOW_PARAMS_HPP
#define PERIFLOW_PARAMS_HPP

/**
 * @file params.hpp
 * @brief Dimensionless parameter set of the porous-channel peristalsis model,
 *        plus conversion from dimensional wall/fluid scales.
 *
 * Every solver in the library consumes the dimensionless group
 * (R, alpha, e, k, s, eps). Dimensional quantities enter only through
 * nondimensionalize(): R = c d / nu, alpha = 2 pi d / lambda, k = k_dim / d^2,
 * eps = a / d; porosity e and slip s are dimensionless to begin with.
 */

#include <string>
#include <vector>

#include "periflow/errors.hpp"

namespace periflow {

/// Dimensional wall/fluid scales. All strictly positive; a < d.
struct DimensionalScales {
    double wave_speed_c = 0.0;           ///< wall wave speed
    double half_width_d = 0.0;           ///< channel half width
    double kinematic_viscosity_nu = 0.0; ///< nu = mu / rho
    double amplitude_a = 0.0;            ///< wall wave amplitude
    double wavelength_lambda = 0.0;      ///< wall wavelength
    double permeability_k_dim = 0.0;     ///< dimensional permeability (length^2)
};

/// The dimensionless group. Immutable value record; pass by value or const&.
struct FlowParameters {
    double reynolds_R = 1.0;         ///< R = c d / nu, > 0
    double wave_number_alpha = 0.25; ///< alpha = 2 pi d / lambda, > 0
    double porosity_e = 0.9;         ///< 0 < e <= 1
    double darcy_k = 1000.0;         ///< k = k_dim / d^2, > 0
    double slip_s = 0.0;             ///< Saffman slip parameter, >= 0
    double amplitude_ratio_eps = 0.1;///< eps = a / d, 0 <= eps < 1
};

/// Imposed time-averaged second-order pressure gradient. Sign selects
/// pumping (negative) versus adverse load (positive).
struct PressureSpec {
    double dp2_mean = 0.0;
};

/// Throws ValidationError unless dp2_mean is finite.
const PressureSpec& validate(const PressureSpec& spec);

/// Amplitude ratio above which the truncated series is flagged as suspect.
inline constexpr double kEpsSeriesWarning = 0.3;

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

/// Collects every violated invariant (and soft warnings) without throwing.
ValidationReport check(const FlowParameters& p);

/// Returns p unchanged if valid; throws ValidationError listing all violations.
const FlowParameters& validate(const FlowParameters& p);

/// Converts dimensional scales to the dimensionless group.
/// Throws ValidationError naming each offending field.
FlowParameters nondimensionalize(const DimensionalScales& scales,
                                 double porosity_e, double slip_s);

}  // namespace periflow

#endif
