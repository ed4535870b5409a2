// periflow command-line front end: evaluate closed-form fields, run sweeps
// and figure presets, and verify the closed forms against the
// finite-difference solves.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "periflow/config.hpp"
#include "periflow/csv.hpp"
#include "periflow/oracle.hpp"
#include "periflow/perturbation.hpp"
#include "periflow/svg_plot.hpp"
#include "periflow/sweep.hpp"
#include "periflow/verification.hpp"
#include "periflow/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace periflow;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct ParamFlags {
    std::optional<double> R, alpha, e, k, s, eps, dp2;
    std::string config_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "key=value parameter file (flags override it)");
        cmd->add_option("--R", R, "Reynolds number");
        cmd->add_option("--alpha", alpha, "wave number");
        cmd->add_option("--e", e, "porosity");
        cmd->add_option("--k", k, "Darcy number");
        cmd->add_option("--s", s, "slip parameter");
        cmd->add_option("--eps", eps, "amplitude ratio");
        cmd->add_option("--dp2", dp2, "mean second-order pressure gradient");
    }

    std::pair<FlowParameters, double> resolve() const {
        FlowParameters p;  // library defaults
        PressureSpec pressure;
        if (!config_path.empty()) {
            apply_flow_config(parse_kv_file(config_path), p, pressure);
        }
        if (R) p.reynolds_R = *R;
        if (alpha) p.wave_number_alpha = *alpha;
        if (e) p.porosity_e = *e;
        if (k) p.darcy_k = *k;
        if (s) p.slip_s = *s;
        if (eps) p.amplitude_ratio_eps = *eps;
        if (dp2) pressure.dp2_mean = *dp2;
        validate(p);
        validate(pressure);
        for (const std::string& warning : check(p).warnings) {
            std::cerr << "warning: " << warning << "\n";
        }
        return {p, pressure.dp2_mean};
    }
};

std::string default_outdir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PERIFLOW_OUTDIR"); env && *env) {
        return env;
    }
    return "out";
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Metadata run_metadata(const FlowParameters& p, double dp2) {
    Metadata md = {{"tool", std::string("periflow ") + PERIFLOW_VERSION},
                   {"generated", timestamp_utc()}};
    const Metadata pm = params_metadata(p, dp2);
    md.insert(md.end(), pm.begin(), pm.end());
    return md;
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
            out += c;
        } else {
            out += '_';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const ParamFlags& flags, const std::string& quantity,
             const std::vector<double>& ys, const std::string& csv_path) {
    const auto [p, dp2] = flags.resolve();
    std::vector<std::pair<double, double>> rows;
    std::ostringstream out;

    if (quantity == "critical") {
        const double v = critical_reflux_pressure(p);
        out << format_double(v) << "\n";
        rows.emplace_back(0.0, v);
    } else if (quantity == "D") {
        const double v = compute_D(p, first_order_coeffs(p));
        out << format_double(v) << "\n";
        rows.emplace_back(0.0, v);
    } else if (quantity == "beta") {
        const Complex b = compute_beta(p);
        out << format_double(b.real()) << " " << format_double(b.imag()) << "\n";
        rows.emplace_back(b.real(), b.imag());
    } else {
        const Quantity q = quantity_from_string(quantity == "u" ? "mean_velocity"
                                                                : quantity);
        if (!is_profile_quantity(q)) {
            throw ConfigError("quantity '" + quantity + "' takes no y samples");
        }
        const MeanFlowSolution m(p, dp2);
        const FirstOrderCoefficients& c = m.coeffs();
        for (double y : ys) {
            double v = 0.0;
            switch (q) {
                case Quantity::phi1_re: v = phi1(c, y).real(); break;
                case Quantity::phi1_im: v = phi1(c, y).imag(); break;
                case Quantity::F: v = m.F(y); break;
                case Quantity::G: v = m.G(y); break;
                case Quantity::mean_velocity: v = m.mean_velocity(y); break;
                case Quantity::phi20_prime: v = m.phi20_prime(y); break;
                default: break;
            }
            out << format_double(y) << " " << format_double(v) << "\n";
            rows.emplace_back(y, v);
        }
    }

    std::cout << out.str();
    if (!csv_path.empty()) {
        Metadata md = run_metadata(p, dp2);
        md.emplace_back("quantity", quantity);
        write_series_csv(csv_path, md, "y", "value", rows);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// profile / sweep / figure
// ---------------------------------------------------------------------------

void write_sweep_outputs(const SweepResult& result, const fs::path& dir,
                         const std::string& stem, bool emit_plot,
                         const std::string& title,
                         std::vector<std::string>& written) {
    fs::create_directories(dir);
    const SweepSpec& spec = result.spec;

    std::vector<PlotSeries> series;
    if (is_profile_quantity(spec.quantity)) {
        for (const SweepPoint& pt : result.points) {
            if (!pt.ok) {
                std::cerr << "warning: skipping " << to_string(spec.axis) << "="
                          << pt.axis_value << ": " << pt.error << "\n";
                continue;
            }
            const std::string name =
                stem + "_" + sanitize(pt.profile.label) + ".csv";
            Metadata md = run_metadata(pt.profile.params, pt.profile.dp2_mean);
            md.emplace_back("quantity", to_string(spec.quantity));
            md.emplace_back("curve", pt.profile.label);
            if (spec.approximate) md.emplace_back("approximate", "true");
            write_series_csv((dir / name).string(), md, "y", "value",
                             pt.profile.samples);
            written.push_back(name);
            series.push_back({pt.profile.label, pt.profile.samples});
        }
    } else {
        std::vector<std::pair<double, double>> rows;
        for (const SweepPoint& pt : result.points) {
            if (!pt.ok) {
                std::cerr << "warning: skipping " << to_string(spec.axis) << "="
                          << pt.axis_value << ": " << pt.error << "\n";
                continue;
            }
            rows.emplace_back(pt.axis_value, pt.scalar);
        }
        const std::string name = stem + "_" + to_string(spec.quantity) + ".csv";
        Metadata md = run_metadata(spec.base, spec.dp2_mean);
        md.emplace_back("quantity", to_string(spec.quantity));
        md.emplace_back("axis", to_string(spec.axis));
        if (spec.approximate) md.emplace_back("approximate", "true");
        write_series_csv((dir / name).string(), md, to_string(spec.axis),
                         to_string(spec.quantity), rows);
        written.push_back(name);
        series.push_back({to_string(spec.quantity), rows});
    }

    if (emit_plot && !series.empty()) {
        PlotOptions opt;
        opt.title = title;
        const bool scalar = !is_profile_quantity(spec.quantity);
        opt.xlabel = scalar ? to_string(spec.axis) : "y";
        opt.ylabel = to_string(spec.quantity);
        opt.log_x = scalar && !spec.values.explicit_list &&
                    spec.values.spacing == Spacing::log;
        const std::string name = stem + ".svg";
        write_line_plot((dir / name).string(), opt, series);
        written.push_back(name);
    }
}

int cmd_figure(const std::string& id, const std::string& outdir_flag) {
    const fs::path dir = default_outdir(outdir_flag);
    const std::vector<std::string> ids =
        id == "all" ? preset_ids() : std::vector<std::string>{id};

    for (const std::string& fid : ids) {
        const FigurePreset preset = figure_preset(fid);
        std::vector<std::string> written;
        std::vector<PlotSeries> all_series;
        for (const SweepSpec& spec : preset.specs) {
            const SweepResult result = run_sweep(spec);
            write_sweep_outputs(result, dir, fid, /*emit_plot=*/false,
                                preset.title, written);
            for (const SweepPoint& pt : result.points) {
                if (!pt.ok) continue;
                if (is_profile_quantity(spec.quantity)) {
                    all_series.push_back({pt.profile.label, pt.profile.samples});
                }
            }
            if (!is_profile_quantity(spec.quantity)) {
                std::vector<std::pair<double, double>> rows;
                for (const SweepPoint& pt : result.points) {
                    if (pt.ok) rows.emplace_back(pt.axis_value, pt.scalar);
                }
                all_series.push_back({to_string(spec.quantity), rows});
            }
        }
        PlotOptions opt;
        opt.title = preset.title;
        const SweepSpec& first = preset.specs.front();
        const bool scalar = !is_profile_quantity(first.quantity);
        opt.xlabel = scalar ? to_string(first.axis) : "y";
        opt.ylabel = to_string(first.quantity);
        opt.log_x = scalar && !first.values.explicit_list &&
                    first.values.spacing == Spacing::log;
        const std::string plot_name = fid + ".svg";
        write_line_plot((dir / plot_name).string(), opt, all_series);
        written.push_back(plot_name);

        // bundle manifest referencing every emitted file
        std::ofstream manifest(dir / (fid + "_manifest.txt"));
        manifest << "# tool=periflow " << PERIFLOW_VERSION << "\n";
        manifest << "# generated=" << timestamp_utc() << "\n";
        for (const std::string& name : written) manifest << name << "\n";
        std::cout << fid << ": wrote " << written.size() << " files to " << dir
                  << "\n";
    }
    return kExitOk;
}

int cmd_profile(const ParamFlags& flags, const std::string& quantity,
                int samples, const std::string& csv_path,
                const std::string& plot_path) {
    const auto [p, dp2] = flags.resolve();
    const Quantity q =
        quantity_from_string(quantity == "u" ? "mean_velocity" : quantity);
    if (!is_profile_quantity(q)) {
        throw ConfigError("profile needs a profile quantity (got '" + quantity +
                          "')");
    }
    SweepSpec spec;
    spec.base = p;
    spec.dp2_mean = dp2;
    spec.axis = Axis::R;
    spec.values = AxisSpec::explicit_values({p.reynolds_R});
    spec.quantity = q;
    spec.y_samples = samples;
    const SweepResult result = run_sweep(spec, ExecutionPolicy::serial);
    const Profile& prof = result.points.front().profile;

    if (!csv_path.empty()) {
        Metadata md = run_metadata(p, dp2);
        md.emplace_back("quantity", to_string(q));
        write_series_csv(csv_path, md, "y", "value", prof.samples);
    } else {
        std::cout << "y,value\n";
        for (const auto& [y, v] : prof.samples) {
            std::cout << format_double(y) << "," << format_double(v) << "\n";
        }
    }
    if (!plot_path.empty()) {
        PlotOptions opt;
        opt.title = to_string(q);
        opt.xlabel = "y";
        opt.ylabel = to_string(q);
        write_line_plot(plot_path, opt, {{to_string(q), prof.samples}});
    }
    return kExitOk;
}

int cmd_sweep(const ParamFlags& flags, const std::string& spec_path,
              const std::string& axis_name, const std::vector<double>& values,
              double min, double max, int count, bool log_spacing,
              const std::string& quantity, int y_samples,
              const std::string& outdir_flag, bool serial) {
    SweepSpec spec;
    if (!spec_path.empty()) {
        spec = read_sweep_spec(spec_path);
    } else {
        const auto [p, dp2] = flags.resolve();
        spec.base = p;
        spec.dp2_mean = dp2;
        if (axis_name.empty()) throw ConfigError("sweep needs --axis");
        spec.axis = axis_from_string(axis_name);
        spec.quantity = quantity_from_string(quantity);
        spec.y_samples = y_samples;
        if (!values.empty()) {
            spec.values = AxisSpec::explicit_values(values);
        } else if (count > 0) {
            spec.values = AxisSpec::range(
                min, max, count, log_spacing ? Spacing::log : Spacing::linear);
        } else {
            throw ConfigError("sweep needs --values or --min/--max/--count");
        }
    }

    const SweepResult result = run_sweep(
        spec, serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
    const fs::path dir = default_outdir(outdir_flag);
    std::vector<std::string> written;
    const std::string stem =
        spec.id.empty() ? std::string("sweep_") + to_string(spec.axis) : spec.id;
    write_sweep_outputs(result, dir, stem, /*emit_plot=*/true,
                        "sweep over " + std::string(to_string(spec.axis)),
                        written);
    std::cout << "wrote " << written.size() << " files to " << dir << "\n";
    if (result.failures > 0) {
        std::cerr << "warning: " << result.failures << " of "
                  << result.points.size() << " points failed\n";
    }
    return kExitOk;
}

int cmd_verify(const ParamFlags& flags, bool have_params, int n, int draws,
               unsigned seed, const std::string& outdir_flag) {
    VerifyOptions options;
    options.grid_points = n;
    options.draws = draws;
    options.seed = seed;
    if (have_params) {
        const auto [p, dp2] = flags.resolve();
        options.explicit_params = p;
        options.explicit_dp2 = dp2;
    }
    const VerifyReport report = run_verification(options);
    std::cout << report.to_text();

    const fs::path dir = default_outdir(outdir_flag);
    fs::create_directories(dir);
    {
        std::ofstream txt(dir / "verify_report.txt");
        txt << "# tool=periflow " << PERIFLOW_VERSION << "\n";
        txt << "# generated=" << timestamp_utc() << "\n";
        txt << report.to_text();
    }
    {
        std::ofstream csv(dir / "verify_residuals.csv");
        csv << report.residuals_csv;
    }
    std::cout << "report: " << (dir / "verify_report.txt").string() << "\n";

    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_presets(const std::string& export_dir) {
    if (!export_dir.empty()) {
        fs::create_directories(export_dir);
        for (const std::string& id : preset_ids()) {
            const FigurePreset preset = figure_preset(id);
            for (size_t i = 0; i < preset.specs.size(); ++i) {
                std::string name = id;
                if (preset.specs.size() > 1) name += "_" + std::to_string(i);
                write_sweep_spec((fs::path(export_dir) / (name + ".cfg")).string(),
                                 preset.specs[i]);
            }
        }
        std::cout << "exported " << preset_ids().size() << " presets to "
                  << export_dir << "\n";
        return kExitOk;
    }
    for (const std::string& id : preset_ids()) {
        const FigurePreset preset = figure_preset(id);
        std::cout << id << ": " << preset.title;
        const SweepSpec& spec = preset.specs.front();
        std::cout << " [axis " << to_string(spec.axis) << ", quantity "
                  << to_string(spec.quantity)
                  << (spec.approximate ? ", approximate axis values" : "") << "]\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"peristaltic porous-channel mean-flow solver"};
    app.set_version_flag("--version", PERIFLOW_VERSION);
    app.require_subcommand(1);

    std::string outdir_flag;
    app.add_option("--outdir", outdir_flag,
                   "output directory (default $PERIFLOW_OUTDIR or ./out)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    ParamFlags eval_flags;
    eval_flags.attach(eval);
    std::string eval_quantity = "critical";
    std::vector<double> eval_ys = {0.0};
    std::string eval_csv;
    eval->add_option("--quantity", eval_quantity,
                     "critical, D, beta, u, F, G, phi20_prime, phi1_re, phi1_im");
    eval->add_option("--y", eval_ys, "sample locations in [-1,1]")->delimiter(',');
    eval->add_option("--csv", eval_csv, "also write a CSV file");

    // profile
    auto* profile = app.add_subcommand("profile", "sample a quantity over y");
    ParamFlags profile_flags;
    profile_flags.attach(profile);
    std::string profile_quantity = "F";
    int profile_samples = 201;
    std::string profile_csv, profile_plot;
    profile->add_option("--quantity", profile_quantity, "profile quantity");
    profile->add_option("--samples", profile_samples, "number of y samples")
        ->check(CLI::Range(2, 100001));
    profile->add_option("--csv", profile_csv, "CSV output path");
    profile->add_option("--plot", profile_plot, "SVG output path");

    // figure
    auto* figure = app.add_subcommand("figure",
                                      "reproduce a published figure scenario");
    std::string figure_id;
    std::string figure_outdir;
    figure->add_option("id", figure_id, "preset id (or 'all')")->required();
    figure->add_option("outdir", figure_outdir, "output directory");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a declarative 1-D sweep");
    ParamFlags sweep_flags;
    sweep_flags.attach(sweep);
    std::string sweep_spec_path, sweep_axis, sweep_quantity = "F";
    std::vector<double> sweep_values;
    double sweep_min = 0.0, sweep_max = 0.0;
    int sweep_count = 0, sweep_y_samples = 201;
    bool sweep_log = false, sweep_serial = false;
    sweep->add_option("--spec", sweep_spec_path, "sweep specification file");
    sweep->add_option("--axis", sweep_axis, "R, alpha, e, k, s, eps or dp2");
    sweep->add_option("--values", sweep_values, "explicit axis values")
        ->delimiter(',');
    sweep->add_option("--min", sweep_min, "range start");
    sweep->add_option("--max", sweep_max, "range end");
    sweep->add_option("--count", sweep_count, "range point count");
    sweep->add_flag("--log", sweep_log, "log-spaced range");
    sweep->add_option("--quantity", sweep_quantity, "output quantity");
    sweep->add_option("--y-samples", sweep_y_samples,
                      "y samples for profile quantities");
    sweep->add_flag("--serial", sweep_serial, "disable parallel evaluation");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check the closed forms against the FD solves");
    ParamFlags verify_flags;
    verify_flags.attach(verify);
    int verify_n = 2001, verify_draws = 20;
    unsigned verify_seed = 42;
    verify->add_option("--n", verify_n, "grid points")->check(CLI::Range(201, 100001));
    verify->add_option("--draws", verify_draws, "number of random draws")
        ->check(CLI::Range(1, 1000));
    verify->add_option("--seed", verify_seed, "random seed");

    // presets
    auto* presets = app.add_subcommand("presets", "list or export figure presets");
    std::string presets_export;
    presets->add_option("--export", presets_export,
                        "write each preset as an editable sweep file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(eval_flags, eval_quantity, eval_ys, eval_csv);
        }
        if (profile->parsed()) {
            return cmd_profile(profile_flags, profile_quantity, profile_samples,
                               profile_csv, profile_plot);
        }
        if (figure->parsed()) {
            return cmd_figure(figure_id, figure_outdir.empty() ? outdir_flag
                                                               : figure_outdir);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_flags, sweep_spec_path, sweep_axis,
                             sweep_values, sweep_min, sweep_max, sweep_count,
                             sweep_log, sweep_quantity, sweep_y_samples,
                             outdir_flag, sweep_serial);
        }
        if (verify->parsed()) {
            const bool have_params =
                verify->count("--R") || verify->count("--alpha") ||
                verify->count("--e") || verify->count("--k") ||
                verify->count("--s") || verify->count("--eps") ||
                verify->count("--dp2") || verify->count("--config");
            return cmd_verify(verify_flags, have_params, verify_n, verify_draws,
                              verify_seed, outdir_flag);
        }
        if (presets->parsed()) {
            return cmd_presets(presets_export);
        }
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const ResonanceError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    } catch (const DegenerateGeometryError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    } catch (const SolverError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    } catch (const SweepError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
