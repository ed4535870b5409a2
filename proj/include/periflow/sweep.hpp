#ifndef PERIFLOW_SWEEP_HPP
#define PERIFLOW_SWEEP_HPP

/**
 * @file sweep.hpp
 * @brief Declarative 1-D parameter sweeps over the model outputs, plus named
 *        presets that reproduce the published figure scenarios.
 *
 * Sweep points are independent; they are evaluated in parallel (OpenMP) by
 * default, with a serial reference path kept for testing. Results land in
 * slots indexed by the input order, so the output is deterministic and
 * identical under either policy. Failures at individual points are recorded
 * per point rather than aborting the sweep.
 */

#include <string>
#include <utility>
#include <vector>

#include "periflow/params.hpp"

namespace periflow {

enum class Quantity {
    phi1_re,
    phi1_im,
    F,
    G,
    mean_velocity,
    phi20_prime,
    D,                 // scalar
    critical_pressure, // scalar
};

bool is_profile_quantity(Quantity q);
const char* to_string(Quantity q);
Quantity quantity_from_string(const std::string& name);

enum class Axis { R, alpha, e, k, s, eps, dp2 };

const char* to_string(Axis a);
Axis axis_from_string(const std::string& name);

/// A sampled curve: (y, value) pairs with full parameter provenance.
struct Profile {
    FlowParameters params;
    double dp2_mean = 0.0;
    Quantity quantity = Quantity::F;
    std::string label;
    std::vector<std::pair<double, double>> samples;
};

enum class Spacing { linear, log };

/// Axis values: either an explicit list or a generated range.
struct AxisSpec {
    std::vector<double> list;  // used when explicit_list
    bool explicit_list = true;
    double min = 0.0, max = 0.0;
    int count = 0;
    Spacing spacing = Spacing::linear;

    static AxisSpec explicit_values(std::vector<double> v);
    static AxisSpec range(double min, double max, int count,
                          Spacing spacing = Spacing::linear);
    std::vector<double> resolve() const;
};

struct SweepSpec {
    std::string id;      // optional provenance tag (figure label)
    std::string label;   // curve-label prefix for outputs
    FlowParameters base;
    double dp2_mean = 0.0;
    Axis axis = Axis::R;
    AxisSpec values;
    Quantity quantity = Quantity::F;
    int y_samples = 201;
    bool approximate = false;  // axis values read off a figure, not a caption
};

/// Substitutes one axis value into (params, dp2).
std::pair<FlowParameters, double> apply_axis(const FlowParameters& base,
                                             double dp2_mean, Axis axis,
                                             double value);

struct SweepPoint {
    double axis_value = 0.0;
    bool ok = false;
    std::string error;  // set when !ok
    Profile profile;    // profile quantities
    double scalar = 0.0; // scalar quantities
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepPoint> points;
    int failures = 0;
};

enum class ExecutionPolicy { serial, parallel };

/// Runs the sweep. Throws SweepError when every point fails.
SweepResult run_sweep(const SweepSpec& spec,
                      ExecutionPolicy policy = ExecutionPolicy::parallel);

struct FigurePreset {
    std::string id;
    std::string title;
    std::vector<SweepSpec> specs;
};

/// Preset for a published-figure scenario. Throws ConfigError for unknown
/// ids, listing the available ones.
FigurePreset figure_preset(const std::string& id);

std::vector<std::string> preset_ids();

}  // namespace periflow

#endif
