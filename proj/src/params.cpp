#include "periflow/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace periflow {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void require_positive(std::vector<std::string>& errs, double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        errs.push_back(std::string(name) + " must be strictly positive (got " + num(v) + ")");
    }
}

}  // namespace

ValidationReport check(const FlowParameters& p) {
    ValidationReport r;
    require_positive(r.errors, p.reynolds_R, "reynolds_R");
    require_positive(r.errors, p.wave_number_alpha, "wave_number_alpha");
    require_positive(r.errors, p.darcy_k, "darcy_k");
    if (!(p.porosity_e > 0.0 && p.porosity_e <= 1.0)) {
        r.errors.push_back("porosity_e must lie in (0, 1] (got " + num(p.porosity_e) + ")");
    }
    if (!(p.slip_s >= 0.0) || !std::isfinite(p.slip_s)) {
        r.errors.push_back("slip_s must be >= 0 (got " + num(p.slip_s) + ")");
    }
    if (!(p.amplitude_ratio_eps >= 0.0 && p.amplitude_ratio_eps < 1.0)) {
        r.errors.push_back("amplitude_ratio_eps must lie in [0, 1) (got " +
                           num(p.amplitude_ratio_eps) + ")");
    } else if (p.amplitude_ratio_eps > kEpsSeriesWarning) {
        r.warnings.push_back("amplitude_ratio_eps = " + num(p.amplitude_ratio_eps) +
                             " exceeds " + num(kEpsSeriesWarning) +
                             "; the amplitude expansion is truncated at second order"
                             " and results may be unreliable");
    }
    return r;
}

const FlowParameters& validate(const FlowParameters& p) {
    ValidationReport r = check(p);
    if (!r.ok()) throw ValidationError(std::move(r.errors));
    return p;
}

const PressureSpec& validate(const PressureSpec& spec) {
    if (!std::isfinite(spec.dp2_mean)) {
        throw ValidationError({"dp2_mean must be finite (got " +
                               num(spec.dp2_mean) + ")"});
    }
    return spec;
}

FlowParameters nondimensionalize(const DimensionalScales& scales,
                                 double porosity_e, double slip_s) {
    std::vector<std::string> errs;
    require_positive(errs, scales.wave_speed_c, "wave_speed_c");
    require_positive(errs, scales.half_width_d, "half_width_d");
    require_positive(errs, scales.kinematic_viscosity_nu, "kinematic_viscosity_nu");
    require_positive(errs, scales.amplitude_a, "amplitude_a");
    require_positive(errs, scales.wavelength_lambda, "wavelength_lambda");
    require_positive(errs, scales.permeability_k_dim, "permeability_k_dim");
    if (errs.empty() && !(scales.amplitude_a < scales.half_width_d)) {
        errs.push_back("amplitude_a must be smaller than half_width_d"
                       " (amplitude ratio would reach 1)");
    }
    if (!errs.empty()) throw ValidationError(std::move(errs));

    FlowParameters p;
    p.reynolds_R = scales.wave_speed_c * scales.half_width_d / scales.kinematic_viscosity_nu;
    p.wave_number_alpha =
        2.0 * std::numbers::pi * scales.half_width_d / scales.wavelength_lambda;
    p.porosity_e = porosity_e;
    p.darcy_k = scales.permeability_k_dim / (scales.half_width_d * scales.half_width_d);
    p.slip_s = slip_s;
    p.amplitude_ratio_eps = scales.amplitude_a / scales.half_width_d;
    return validate(p);
}

}  // namespace periflow
