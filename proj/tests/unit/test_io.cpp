#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "periflow/config.hpp"
#include "periflow/csv.hpp"
#include "periflow/svg_plot.hpp"
#include "support/cases.hpp"

using namespace periflow;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("periflow_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name) const {
        return (dir / name).string();
    }
};

}  // namespace

TEST_CASE("format_double round-trips") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, int(rng() % 19) - 9);
        CHECK(parse_double(format_double(v), "roundtrip") == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("CSV: header comments, data rows, trailing newline") {
    TempDir tmp;
    const std::string path = tmp.file("profile.csv");
    write_series_csv(path, params_metadata(cases::anchor(), -2.5), "y", "value",
                     {{-1.0, 0.015}, {0.0, 0.18}, {1.0, 0.015}});
    const std::string text = slurp(path);
    CHECK(text.find("# R=15\n") != std::string::npos);
    CHECK(text.find("# alpha=0.25\n") != std::string::npos);
    CHECK(text.find("# dp2=-2.5\n") != std::string::npos);
    CHECK(text.find("y,value\n") != std::string::npos);
    CHECK(text.find("\n0,0.18\n") != std::string::npos);
    CHECK(text.back() == '\n');
    // every non-comment line is a header or data row
    std::stringstream ss(text);
    std::string line;
    int data = 0, comments = 0;
    while (std::getline(ss, line)) {
        if (line.rfind("#", 0) == 0) ++comments;
        else ++data;
    }
    CHECK(comments == 7);
    CHECK(data == 4);  // header row + 3 samples
}

TEST_CASE("CSV: unwritable path is reported") {
    CHECK_THROWS_AS(write_series_csv("/nonexistent_dir/x.csv", {}, "a", "b", {}),
                    ConfigError);
}

TEST_CASE("config: grammar") {
    const KeyValues kv = parse_kv_text(
        "# comment line\n"
        "R = 15\n"
        "\n"
        "alpha=0.25\n"
        "  e  =  0.9  \n"
        "k=1000\n",
        "test");
    CHECK(kv.at("R") == "15");
    CHECK(kv.at("alpha") == "0.25");
    CHECK(kv.at("e") == "0.9");
    CHECK(kv.size() == 4);

    CHECK_THROWS_WITH_AS(parse_kv_text("novalue\n", "test"),
                         doctest::Contains("test:1"), ConfigError);
    CHECK_THROWS_AS(parse_kv_text("=5\n", "test"), ConfigError);
    CHECK_THROWS_AS(parse_kv_file("/no/such/file.cfg"), ConfigError);
}

TEST_CASE("config: parameters") {
    FlowParameters p;
    PressureSpec pressure;
    apply_flow_config(parse_kv_text("R=15\nalpha=0.25\ne=0.9\nk=1000\n"
                                    "s=0.0001\neps=0.1\ndp2=-2.5\n",
                                    "test"),
                      p, pressure);
    CHECK(p.reynolds_R == 15);
    CHECK(p.wave_number_alpha == 0.25);
    CHECK(p.porosity_e == 0.9);
    CHECK(p.darcy_k == 1000);
    CHECK(p.slip_s == 0.0001);
    CHECK(p.amplitude_ratio_eps == 0.1);
    CHECK(pressure.dp2_mean == -2.5);

    CHECK_THROWS_WITH_AS(
        apply_flow_config(parse_kv_text("Reynolds=15\n", "t"), p, pressure),
        doctest::Contains("Reynolds"), ConfigError);
    CHECK_THROWS_AS(apply_flow_config(parse_kv_text("R=abc\n", "t"), p, pressure),
                    ConfigError);
}

TEST_CASE("pressure spec: only finite values validate") {
    PressureSpec ok;
    ok.dp2_mean = -2.5;
    CHECK_NOTHROW(validate(ok));
    PressureSpec bad;
    bad.dp2_mean = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("config: sweep spec needs its required keys") {
    CHECK_THROWS_WITH_AS(
        sweep_spec_from_kv(parse_kv_text("quantity=F\nvalues=1,2\n", "t"), "t"),
        doctest::Contains("axis"), ConfigError);
    CHECK_THROWS_WITH_AS(
        sweep_spec_from_kv(parse_kv_text("axis=R\nquantity=F\n", "t"), "t"),
        doctest::Contains("min"), ConfigError);
    const SweepSpec spec = sweep_spec_from_kv(
        parse_kv_text("axis=R\nquantity=F\nmin=1\nmax=10\ncount=4\n"
                      "spacing=log\ny_samples=7\napproximate=true\n",
                      "t"),
        "t");
    CHECK(spec.axis == Axis::R);
    CHECK(spec.values.resolve().size() == 4);
    CHECK(spec.y_samples == 7);
    CHECK(spec.approximate);
}

TEST_CASE("svg plot: writes a self-contained file") {
    TempDir tmp;
    const std::string path = tmp.file("plot.svg");
    PlotOptions opt;
    opt.title = "test";
    opt.xlabel = "y";
    opt.ylabel = "F";
    write_line_plot(path, opt,
                    {{"a", {{-1, 0.1}, {0, 1.0}, {1, 0.1}}},
                     {"b", {{-1, 0.2}, {0, 0.5}, {1, 0.2}}}});
    const std::string text = slurp(path);
    CHECK(text.rfind("<svg", 0) == 0);
    CHECK(text.find("</svg>") != std::string::npos);
    CHECK(text.find("polyline") != std::string::npos);
    CHECK(text.find(">a</text>") != std::string::npos);
    CHECK(text.find(">b</text>") != std::string::npos);

    // deterministic output for identical input
    const std::string path2 = tmp.file("plot2.svg");
    write_line_plot(path2, opt,
                    {{"a", {{-1, 0.1}, {0, 1.0}, {1, 0.1}}},
                     {"b", {{-1, 0.2}, {0, 0.5}, {1, 0.2}}}});
    CHECK(slurp(path) == slurp(path2));

    CHECK_THROWS_AS(write_line_plot(tmp.file("empty.svg"), opt, {}), ConfigError);
}
