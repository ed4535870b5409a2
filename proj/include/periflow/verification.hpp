#ifndef PERIFLOW_VERIFICATION_HPP
#define PERIFLOW_VERIFICATION_HPP

/**
 * @file verification.hpp
 * @brief The self-check suite behind the `verify` command: closed forms vs
 *        the finite-difference solves, residual scans, and the structural
 *        properties (parity, realness, branch invariance, boundary
 *        conditions).
 *
 * Default mode draws random parameter sets from the documented ranges
 * (R in [1,30], alpha in [0.1,0.5], e in [0.5,1], k log-uniform in
 * [0.05, 1e4], s in [0, 0.01], dp2 in [-3,3]) with a fixed seed. An explicit
 * parameter set can be supplied instead; comparisons whose grid cannot
 * resolve the wall boundary layer are reported as skipped rather than
 * silently inaccurate.
 */

#include <optional>
#include <string>
#include <vector>

#include "periflow/params.hpp"

namespace periflow {

struct VerifyOptions {
    int grid_points = 2001;
    int draws = 20;
    unsigned seed = 42;
    int residual_samples = 50;
    std::optional<FlowParameters> explicit_params;
    double explicit_dp2 = 0.0;
};

struct VerifyCheck {
    std::string name;
    double measured = 0.0;
    std::string criterion;  // human-readable pass condition
    bool passed = false;
    bool skipped = false;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::string residuals_csv;  // per-draw error table

    bool all_passed() const;
    std::string to_text() const;
};

/// Draws evaluated by the default protocol (exposed for the draw-based
/// acceptance checks).
std::vector<std::pair<FlowParameters, double>> verification_draws(int count,
                                                                  unsigned seed);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace periflow

#endif
