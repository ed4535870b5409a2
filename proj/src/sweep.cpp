#include "periflow/sweep.hpp"

#include <cmath>
#include <sstream>

#include "periflow/perturbation.hpp"

namespace periflow {

bool is_profile_quantity(Quantity q) {
    return q != Quantity::D && q != Quantity::critical_pressure;
}

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::phi1_re: return "phi1_re";
        case Quantity::phi1_im: return "phi1_im";
        case Quantity::F: return "F";
        case Quantity::G: return "G";
        case Quantity::mean_velocity: return "mean_velocity";
        case Quantity::phi20_prime: return "phi20_prime";
        case Quantity::D: return "D";
        case Quantity::critical_pressure: return "critical_pressure";
    }
    return "?";
}

Quantity quantity_from_string(const std::string& name) {
    for (Quantity q : {Quantity::phi1_re, Quantity::phi1_im, Quantity::F,
                       Quantity::G, Quantity::mean_velocity,
                       Quantity::phi20_prime, Quantity::D,
                       Quantity::critical_pressure}) {
        if (name == to_string(q)) return q;
    }
    throw ConfigError("unknown quantity '" + name +
                      "' (expected phi1_re, phi1_im, F, G, mean_velocity, "
                      "phi20_prime, D or critical_pressure)");
}

const char* to_string(Axis a) {
    switch (a) {
        case Axis::R: return "R";
        case Axis::alpha: return "alpha";
        case Axis::e: return "e";
        case Axis::k: return "k";
        case Axis::s: return "s";
        case Axis::eps: return "eps";
        case Axis::dp2: return "dp2";
    }
    return "?";
}

Axis axis_from_string(const std::string& name) {
    for (Axis a : {Axis::R, Axis::alpha, Axis::e, Axis::k, Axis::s, Axis::eps,
                   Axis::dp2}) {
        if (name == to_string(a)) return a;
    }
    throw ConfigError("unknown axis '" + name +
                      "' (expected R, alpha, e, k, s, eps or dp2)");
}

AxisSpec AxisSpec::explicit_values(std::vector<double> v) {
    AxisSpec spec;
    spec.list = std::move(v);
    spec.explicit_list = true;
    return spec;
}

AxisSpec AxisSpec::range(double min, double max, int count, Spacing spacing) {
    AxisSpec spec;
    spec.explicit_list = false;
    spec.min = min;
    spec.max = max;
    spec.count = count;
    spec.spacing = spacing;
    return spec;
}

std::vector<double> AxisSpec::resolve() const {
    if (explicit_list) return list;
    if (count < 1) throw ConfigError("axis range needs count >= 1");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = min;
        return out;
    }
    if (spacing == Spacing::log) {
        if (!(min > 0.0 && max > 0.0)) {
            throw ConfigError("log-spaced axis needs positive bounds");
        }
        const double l0 = std::log10(min), l1 = std::log10(max);
        for (int i = 0; i < count; ++i) {
            out[i] = std::pow(10.0, l0 + (l1 - l0) * i / (count - 1));
        }
    } else {
        for (int i = 0; i < count; ++i) {
            out[i] = min + (max - min) * i / (count - 1);
        }
    }
    return out;
}

std::pair<FlowParameters, double> apply_axis(const FlowParameters& base,
                                             double dp2_mean, Axis axis,
                                             double value) {
    FlowParameters p = base;
    double dp2 = dp2_mean;
    switch (axis) {
        case Axis::R: p.reynolds_R = value; break;
        case Axis::alpha: p.wave_number_alpha = value; break;
        case Axis::e: p.porosity_e = value; break;
        case Axis::k: p.darcy_k = value; break;
        case Axis::s: p.slip_s = value; break;
        case Axis::eps: p.amplitude_ratio_eps = value; break;
        case Axis::dp2: dp2 = value; break;
    }
    return {p, dp2};
}

namespace {

std::string point_label(const SweepSpec& spec, double value) {
    std::ostringstream os;
    if (!spec.label.empty()) os << spec.label;
    os << to_string(spec.axis) << "=" << value;
    return os.str();
}

SweepPoint evaluate_point(const SweepSpec& spec, double value) {
    SweepPoint pt;
    pt.axis_value = value;
    try {
        auto [params, dp2] = apply_axis(spec.base, spec.dp2_mean, spec.axis, value);
        validate(params);
        if (is_profile_quantity(spec.quantity)) {
            Profile prof;
            prof.params = params;
            prof.dp2_mean = dp2;
            prof.quantity = spec.quantity;
            prof.label = point_label(spec, value);
            const int ny = std::max(2, spec.y_samples);
            prof.samples.reserve(ny);

            if (spec.quantity == Quantity::phi1_re ||
                spec.quantity == Quantity::phi1_im) {
                const FirstOrderCoefficients c = first_order_coeffs(params);
                for (int i = 0; i < ny; ++i) {
                    const double y = -1.0 + 2.0 * i / (ny - 1);
                    const Complex v = phi1(c, y);
                    prof.samples.emplace_back(
                        y, spec.quantity == Quantity::phi1_re ? v.real()
                                                              : v.imag());
                }
            } else {
                const MeanFlowSolution m(params, dp2);
                for (int i = 0; i < ny; ++i) {
                    const double y = -1.0 + 2.0 * i / (ny - 1);
                    double v = 0.0;
                    switch (spec.quantity) {
                        case Quantity::F: v = m.F(y); break;
                        case Quantity::G: v = m.G(y); break;
                        case Quantity::mean_velocity: v = m.mean_velocity(y); break;
                        case Quantity::phi20_prime: v = m.phi20_prime(y); break;
                        default: break;
                    }
                    if (!std::isfinite(v)) {
                        throw SolverError("non-finite profile value");
                    }
                    prof.samples.emplace_back(y, v);
                }
            }
            pt.profile = std::move(prof);
        } else if (spec.quantity == Quantity::D) {
            pt.scalar = compute_D(params, first_order_coeffs(params));
        } else {
            pt.scalar = critical_reflux_pressure(params);
        }
        pt.ok = true;
    } catch (const std::exception& ex) {
        pt.ok = false;
        pt.error = ex.what();
    }
    return pt;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, ExecutionPolicy policy) {
    const std::vector<double> values = spec.values.resolve();
    if (values.empty()) throw SweepError("sweep has no axis values");

    SweepResult result;
    result.spec = spec;
    result.points.resize(values.size());

    const int count = static_cast<int>(values.size());
    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            result.points[i] = evaluate_point(spec, values[i]);
        }
    } else {
        for (int i = 0; i < count; ++i) {
            result.points[i] = evaluate_point(spec, values[i]);
        }
    }

    for (const SweepPoint& pt : result.points) {
        if (!pt.ok) ++result.failures;
    }
    if (result.failures == count) {
        throw SweepError("every sweep point failed; first error: " +
                         result.points.front().error);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

namespace {

FlowParameters make_params(double R, double alpha, double e, double k, double s,
                           double eps = 0.1) {
    FlowParameters p;
    p.reynolds_R = R;
    p.wave_number_alpha = alpha;
    p.porosity_e = e;
    p.darcy_k = k;
    p.slip_s = s;
    p.amplitude_ratio_eps = eps;
    return p;
}

SweepSpec make_spec(std::string id, FlowParameters base, double dp2, Axis axis,
                    AxisSpec values, Quantity quantity, bool approximate,
                    std::string label = "") {
    SweepSpec s;
    s.id = std::move(id);
    s.label = std::move(label);
    s.base = base;
    s.dp2_mean = dp2;
    s.axis = axis;
    s.values = std::move(values);
    s.quantity = quantity;
    s.approximate = approximate;
    return s;
}

FigurePreset build_preset(const std::string& id) {
    using AS = AxisSpec;
    // Recurring caption parameter sets
    const FlowParameters fig2_base = make_params(10, 0.25, 0.9, 1000, 1e-4);
    const FlowParameters mv_base = make_params(15, 0.25, 0.9, 1000, 1e-4, 0.1);

    if (id == "fig2a") {
        return {id, "wall constant D vs Reynolds number",
                {make_spec(id, fig2_base, 0, Axis::R,
                           AS::range(1, 30, 30), Quantity::D, true)}};
    }
    if (id == "fig2b") {
        return {id, "wall constant D vs wave number",
                {make_spec(id, fig2_base, 0, Axis::alpha,
                           AS::range(0.1, 0.5, 21), Quantity::D, true)}};
    }
    if (id == "fig2c") {
        return {id, "wall constant D vs Darcy number",
                {make_spec(id, fig2_base, 0, Axis::k,
                           AS::range(0.1, 1000, 25, Spacing::log), Quantity::D,
                           true)}};
    }
    if (id == "fig2d") {
        return {id, "wall constant D vs porosity",
                {make_spec(id, fig2_base, 0, Axis::e,
                           AS::range(0.5, 0.99, 25), Quantity::D, true)}};
    }
    if (id == "fig2e") {
        return {id, "wall constant D vs slip parameter",
                {make_spec(id, fig2_base, 0, Axis::s,
                           AS::range(1e-5, 1e-2, 25, Spacing::log), Quantity::D,
                           true)}};
    }
    if (id == "fig3") {
        // porous channel curve vs the classical non-porous no-slip limit
        return {id, "mean-flow perturbation F(y), porous vs channel limit",
                {make_spec(id, make_params(1, 0.4, 0.99, 10000, 1e-5), 0,
                           Axis::R, AS::explicit_values({1}), Quantity::F,
                           false, "porous_"),
                 make_spec(id, make_params(1, 0.4, 1.0, 1e8, 0.0), 0, Axis::R,
                           AS::explicit_values({1}), Quantity::F, false,
                           "channel_limit_")}};
    }
    if (id == "fig4") {
        return {id, "F(y) for several Reynolds numbers",
                {make_spec(id, make_params(10, 0.25, 0.9, 1000, 1e-5), 0,
                           Axis::R, AS::explicit_values({1, 5, 10}),
                           Quantity::F, true)}};
    }
    if (id == "fig5") {
        return {id, "F(y) for several wave numbers",
                {make_spec(id, make_params(10, 0.25, 0.9, 1000, 1e-5), 0,
                           Axis::alpha, AS::explicit_values({0.1, 0.25, 0.4}),
                           Quantity::F, true)}};
    }
    if (id == "fig6") {
        return {id, "F(y) for several Darcy numbers",
                {make_spec(id, make_params(10, 0.25, 0.9, 1000, 1e-5), 0,
                           Axis::k, AS::explicit_values({10, 100, 1000}),
                           Quantity::F, true)}};
    }
    if (id == "fig7") {
        return {id, "F(y) for several porosities",
                {make_spec(id, make_params(10, 0.25, 0.9, 1000, 1e-5), 0,
                           Axis::e, AS::explicit_values({0.5, 0.7, 0.9}),
                           Quantity::F, true)}};
    }
    if (id == "fig8") {
        return {id, "F(y) for several slip parameters",
                {make_spec(id, make_params(10, 0.25, 0.9, 1000, 1e-5), 0,
                           Axis::s, AS::explicit_values({1e-5, 1e-3, 1e-2}),
                           Quantity::F, true)}};
    }
    if (id == "fig9") {
        return {id, "mean axial velocity for several Reynolds numbers",
                {make_spec(id, mv_base, -2.5, Axis::R,
                           AS::explicit_values({1, 5, 10, 15, 20, 25}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig10") {
        return {id, "mean axial velocity for several mean pressure gradients",
                {make_spec(id, mv_base, -2.5, Axis::dp2,
                           AS::explicit_values({-2.5, -1.0, 0.0, 0.220966, 0.5}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig11") {
        return {id, "mean axial velocity for several amplitude ratios",
                {make_spec(id, mv_base, -2.5, Axis::eps,
                           AS::explicit_values({0.05, 0.1, 0.15, 0.2}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig12") {
        return {id, "mean axial velocity for several Darcy numbers",
                {make_spec(id, mv_base, -2.5, Axis::k,
                           AS::explicit_values({1, 10, 100, 1000}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig13a" || id == "fig13b" || id == "fig13c" || id == "fig13d") {
        const double k = id == "fig13a"   ? 1.0
                         : id == "fig13b" ? 0.5
                         : id == "fig13c" ? 0.1
                                          : 0.05;
        return {id, "mean axial velocity for several porosities",
                {make_spec(id, make_params(15, 0.25, 0.9, k, 1e-4, 0.1), -2.5,
                           Axis::e, AS::explicit_values({0.5, 0.7, 0.9}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig14a" || id == "fig14b") {
        const double k = id == "fig14a" ? 1.0 : 0.05;
        return {id, "mean axial velocity for several slip parameters",
                {make_spec(id, make_params(15, 0.25, 0.7, k, 1e-4, 0.1), -2.5,
                           Axis::s, AS::explicit_values({1e-4, 1e-3, 1e-2}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig15") {
        return {id, "mean axial velocity for several wave numbers",
                {make_spec(id, make_params(15, 0.2, 0.7, 100, 1e-3, 0.1), -2.5,
                           Axis::alpha, AS::explicit_values({0.2, 0.3, 0.4}),
                           Quantity::mean_velocity, true)}};
    }
    if (id == "fig16a" || id == "fig16b") {
        const double e = id == "fig16a" ? 0.99 : 0.9;
        return {id, "critical reflux pressure vs Reynolds number",
                {make_spec(id, make_params(20, 0.2, e, 1000, 1e-4), 0, Axis::R,
                           AS::range(1, 30, 30), Quantity::critical_pressure,
                           true)}};
    }
    if (id == "fig17a" || id == "fig17b") {
        const double e = id == "fig17a" ? 0.99 : 0.9;
        return {id, "critical reflux pressure vs wave number",
                {make_spec(id, make_params(20, 0.2, e, 1000, 1e-4), 0,
                           Axis::alpha, AS::range(0.1, 0.5, 21),
                           Quantity::critical_pressure, true)}};
    }
    if (id == "fig18a" || id == "fig18b") {
        const double e = id == "fig18a" ? 0.8 : 0.7;
        return {id, "critical reflux pressure vs Darcy number",
                {make_spec(id, make_params(20, 0.2, e, 1000, 1e-4), 0, Axis::k,
                           AS::range(0.05, 1000, 25, Spacing::log),
                           Quantity::critical_pressure, true)}};
    }
    if (id == "fig19") {
        return {id, "critical reflux pressure vs porosity",
                {make_spec(id, make_params(20, 0.2, 0.9, 10, 1e-3), 0, Axis::e,
                           AS::range(0.5, 0.99, 25),
                           Quantity::critical_pressure, true)}};
    }
    if (id == "fig20a" || id == "fig20b" || id == "fig20c" || id == "fig20d") {
        double R = 15, k = 10;
        if (id == "fig20a") R = 10;
        if (id == "fig20c") k = 1.0;
        if (id == "fig20d") k = 0.1;
        return {id, "critical reflux pressure vs slip parameter",
                {make_spec(id, make_params(R, 0.2, 0.7, k, 1e-3), 0, Axis::s,
                           AS::range(1e-5, 1e-2, 25, Spacing::log),
                           Quantity::critical_pressure, true)}};
    }
    throw ConfigError("unknown preset id");
}

}  // namespace

std::vector<std::string> preset_ids() {
    return {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig3", "fig4",
            "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11",
            "fig12", "fig13a", "fig13b", "fig13c", "fig13d", "fig14a",
            "fig14b", "fig15", "fig16a", "fig16b", "fig17a", "fig17b",
            "fig18a", "fig18b", "fig19", "fig20a", "fig20b", "fig20c",
            "fig20d"};
}

FigurePreset figure_preset(const std::string& id) {
    try {
        return build_preset(id);
    } catch (const ConfigError&) {
        std::string msg = "unknown figure preset '" + id + "'; available:";
        for (const std::string& known : preset_ids()) msg += " " + known;
        throw ConfigError(msg);
    }
}

}  // namespace periflow
