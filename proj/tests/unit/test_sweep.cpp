#include <doctest.h>

#include <cmath>

#include "periflow/config.hpp"
#include "periflow/perturbation.hpp"
#include "periflow/sweep.hpp"
#include "support/cases.hpp"

using namespace periflow;

TEST_CASE("quantity and axis names round-trip") {
    for (Quantity q : {Quantity::phi1_re, Quantity::phi1_im, Quantity::F,
                       Quantity::G, Quantity::mean_velocity,
                       Quantity::phi20_prime, Quantity::D,
                       Quantity::critical_pressure}) {
        CHECK(quantity_from_string(to_string(q)) == q);
    }
    for (Axis a : {Axis::R, Axis::alpha, Axis::e, Axis::k, Axis::s, Axis::eps,
                   Axis::dp2}) {
        CHECK(axis_from_string(to_string(a)) == a);
    }
    CHECK_THROWS_AS(quantity_from_string("vorticity"), ConfigError);
    CHECK_THROWS_AS(axis_from_string("Q"), ConfigError);
}

TEST_CASE("axis values: ranges and lists") {
    const auto lin = AxisSpec::range(0.0, 1.0, 5).resolve();
    REQUIRE(lin.size() == 5);
    CHECK(lin[0] == 0.0);
    CHECK(lin[2] == doctest::Approx(0.5));
    CHECK(lin[4] == 1.0);

    const auto lg = AxisSpec::range(0.1, 1000.0, 5, Spacing::log).resolve();
    REQUIRE(lg.size() == 5);
    CHECK(lg[0] == doctest::Approx(0.1));
    CHECK(lg[2] == doctest::Approx(10.0));
    CHECK(lg[4] == doctest::Approx(1000.0));

    CHECK(AxisSpec::range(3.0, 9.0, 1).resolve() == std::vector<double>{3.0});
    CHECK_THROWS_AS(AxisSpec::range(-1.0, 1.0, 4, Spacing::log).resolve(),
                    ConfigError);
    CHECK(AxisSpec::explicit_values({2, 4}).resolve() ==
          std::vector<double>{2, 4});
}

TEST_CASE("apply_axis touches exactly one knob") {
    const FlowParameters base = cases::anchor();
    CHECK(apply_axis(base, 0.5, Axis::R, 7).first.reynolds_R == 7);
    CHECK(apply_axis(base, 0.5, Axis::alpha, 0.4).first.wave_number_alpha == 0.4);
    CHECK(apply_axis(base, 0.5, Axis::e, 0.6).first.porosity_e == 0.6);
    CHECK(apply_axis(base, 0.5, Axis::k, 9).first.darcy_k == 9);
    CHECK(apply_axis(base, 0.5, Axis::s, 1e-3).first.slip_s == 1e-3);
    CHECK(apply_axis(base, 0.5, Axis::eps, 0.2).first.amplitude_ratio_eps == 0.2);
    CHECK(apply_axis(base, 0.5, Axis::dp2, -1.5).second == -1.5);
    CHECK(apply_axis(base, 0.5, Axis::R, 7).second == 0.5);
}

TEST_CASE("degenerate sweep reproduces the direct evaluation bit-for-bit") {
    SweepSpec spec;
    spec.base = cases::anchor();
    spec.dp2_mean = -2.5;
    spec.axis = Axis::R;
    spec.values = AxisSpec::explicit_values({15});
    spec.quantity = Quantity::mean_velocity;
    spec.y_samples = 41;
    const SweepResult r = run_sweep(spec, ExecutionPolicy::serial);
    REQUIRE(r.points.size() == 1);
    REQUIRE(r.points[0].ok);
    const MeanFlowSolution m(cases::anchor(), -2.5);
    for (const auto& [y, v] : r.points[0].profile.samples) {
        CHECK(v == m.mean_velocity(y));  // identical code path, identical bits
    }
}

TEST_CASE("serial and parallel sweeps produce identical results") {
    SweepSpec spec;
    spec.base = cases::anchor();
    spec.axis = Axis::k;
    spec.values = AxisSpec::range(0.1, 1e4, 64, Spacing::log);
    spec.quantity = Quantity::critical_pressure;
    const SweepResult serial = run_sweep(spec, ExecutionPolicy::serial);
    const SweepResult parallel = run_sweep(spec, ExecutionPolicy::parallel);
    REQUIRE(serial.points.size() == parallel.points.size());
    for (size_t i = 0; i < serial.points.size(); ++i) {
        CHECK(serial.points[i].ok == parallel.points[i].ok);
        CHECK(serial.points[i].axis_value == parallel.points[i].axis_value);
        CHECK(serial.points[i].scalar == parallel.points[i].scalar);
    }
}

TEST_CASE("individual point failures are recorded, not fatal") {
    SweepSpec spec;
    spec.base = cases::anchor();
    spec.axis = Axis::eps;
    spec.values = AxisSpec::explicit_values({0.1, 1.5});  // second is invalid
    spec.quantity = Quantity::mean_velocity;
    spec.y_samples = 11;
    const SweepResult r = run_sweep(spec);
    CHECK(r.failures == 1);
    CHECK(r.points[0].ok);
    CHECK_FALSE(r.points[1].ok);
    CHECK(r.points[1].error.find("amplitude_ratio_eps") != std::string::npos);
}

TEST_CASE("a sweep where every point fails throws") {
    SweepSpec spec;
    spec.base = cases::anchor();
    spec.axis = Axis::e;
    spec.values = AxisSpec::explicit_values({1.5, 2.0});
    spec.quantity = Quantity::F;
    CHECK_THROWS_AS(run_sweep(spec), SweepError);
}

TEST_CASE("presets: caption parameters") {
    const FigurePreset f3 = figure_preset("fig3");
    REQUIRE(f3.specs.size() == 2);
    CHECK(f3.specs[0].base.reynolds_R == 1);
    CHECK(f3.specs[0].base.wave_number_alpha == 0.4);
    CHECK(f3.specs[0].base.darcy_k == 10000);
    CHECK(f3.specs[0].base.porosity_e == 0.99);
    CHECK(f3.specs[0].base.slip_s == 1e-5);
    CHECK(f3.specs[0].quantity == Quantity::F);
    CHECK_FALSE(f3.specs[0].approximate);
    CHECK(f3.specs[1].base.porosity_e == 1.0);
    CHECK(f3.specs[1].base.slip_s == 0.0);

    const FigurePreset f9 = figure_preset("fig9");
    REQUIRE(f9.specs.size() == 1);
    CHECK(f9.specs[0].axis == Axis::R);
    CHECK(f9.specs[0].quantity == Quantity::mean_velocity);
    CHECK(f9.specs[0].dp2_mean == -2.5);
    CHECK(f9.specs[0].base.wave_number_alpha == 0.25);
    CHECK(f9.specs[0].base.porosity_e == 0.9);
    CHECK(f9.specs[0].base.amplitude_ratio_eps == 0.1);
    CHECK(f9.specs[0].base.darcy_k == 1000);
    CHECK(f9.specs[0].base.slip_s == 1e-4);
    CHECK(f9.specs[0].approximate);  // legend values read off the figure

    const FigurePreset f19 = figure_preset("fig19");
    CHECK(f19.specs[0].axis == Axis::e);
    CHECK(f19.specs[0].quantity == Quantity::critical_pressure);
    CHECK(f19.specs[0].base.reynolds_R == 20);
    CHECK(f19.specs[0].base.wave_number_alpha == 0.2);
    CHECK(f19.specs[0].base.darcy_k == 10);
    CHECK(f19.specs[0].base.slip_s == 1e-3);

    const FigurePreset f13a = figure_preset("fig13a");
    CHECK(f13a.specs[0].axis == Axis::e);
    CHECK(f13a.specs[0].base.darcy_k == 1.0);
    CHECK(figure_preset("fig13d").specs[0].base.darcy_k == 0.05);
}

TEST_CASE("presets: unknown id lists the catalogue") {
    CHECK_THROWS_WITH_AS(figure_preset("fig99"), doctest::Contains("fig16a"),
                         ConfigError);
    CHECK(preset_ids().size() == 33);
    for (const std::string& id : preset_ids()) {
        CHECK_NOTHROW(figure_preset(id));
    }
}

TEST_CASE("preset sweep specs round-trip through the config format") {
    for (const char* id : {"fig3", "fig9", "fig16a", "fig18b"}) {
        const FigurePreset preset = figure_preset(id);
        for (const SweepSpec& spec : preset.specs) {
            const std::string text = sweep_spec_to_text(spec);
            const SweepSpec again =
                sweep_spec_from_kv(parse_kv_text(text, "roundtrip"), "roundtrip");
            const SweepResult a = run_sweep(spec, ExecutionPolicy::serial);
            const SweepResult b = run_sweep(again, ExecutionPolicy::serial);
            REQUIRE(a.points.size() == b.points.size());
            for (size_t i = 0; i < a.points.size(); ++i) {
                CHECK(a.points[i].axis_value == b.points[i].axis_value);
                if (is_profile_quantity(spec.quantity)) {
                    CHECK(a.points[i].profile.samples ==
                          b.points[i].profile.samples);
                } else {
                    CHECK(a.points[i].scalar == b.points[i].scalar);
                }
            }
        }
    }
}

TEST_CASE("critical-pressure series decreases with Reynolds number") {
    const FigurePreset preset = figure_preset("fig16a");
    const SweepResult r = run_sweep(preset.specs[0]);
    double prev = 1e300;
    for (const SweepPoint& pt : r.points) {
        REQUIRE(pt.ok);
        CHECK(pt.scalar < prev);
        prev = pt.scalar;
    }
}
