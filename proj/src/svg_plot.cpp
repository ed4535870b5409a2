#include "periflow/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "periflow/errors.hpp"

namespace periflow {

namespace {

constexpr double kWidth = 800, kHeight = 540;
constexpr double kLeft = 78, kRight = 24, kTop = 46, kBottom = 58;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_line_plot(const std::string& path, const PlotOptions& options,
                     const std::vector<PlotSeries>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            const double px = options.log_x ? std::log10(x) : x;
            xmin = std::min(xmin, px);
            xmax = std::max(xmax, px);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin <= xmax) || !(ymin <= ymax)) {
        throw ConfigError("plot '" + path + "': no finite data");
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto X = [&](double x) {
        const double px = options.log_x ? std::log10(x) : x;
        return kLeft + (px - xmin) / (xmax - xmin) * pw;
    };
    const auto Y = [&](double y) {
        return kTop + (ymax - y) / (ymax - ymin) * ph;
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">"
        << escape(options.title) << "</text>\n";

    // frame
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks and grid
    const int nticks = 6;
    for (int i = 0; i < nticks; ++i) {
        const double tx = xmin + (xmax - xmin) * i / (nticks - 1);
        const double gx = kLeft + pw * i / (nticks - 1);
        const double label = options.log_x ? std::pow(10.0, tx) : tx;
        out << "<line x1=\"" << gx << "\" y1=\"" << kTop << "\" x2=\"" << gx
            << "\" y2=\"" << kTop + ph
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << kTop + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << fmt(label, "%.4g") << "</text>\n";
        const double ty = ymin + (ymax - ymin) * i / (nticks - 1);
        const double gy = kTop + ph - ph * i / (nticks - 1);
        out << "<line x1=\"" << kLeft << "\" y1=\"" << gy << "\" x2=\""
            << kLeft + pw << "\" y2=\"" << gy
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << fmt(ty, "%.4g") << "</text>\n";
    }
    out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << escape(options.xlabel) << "</text>\n";
    out << "<text x=\"20\" y=\"" << kTop + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 20 "
        << kTop + ph / 2 << ")\">" << escape(options.ylabel) << "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : series[si].points) {
            out << fmt(X(x), "%.2f") << "," << fmt(Y(y), "%.2f") << " ";
        }
        out << "\"/>\n";
        // legend entry
        const double ly = kTop + 16 + 18.0 * si;
        out << "<line x1=\"" << kLeft + pw - 150 << "\" y1=\"" << ly
            << "\" x2=\"" << kLeft + pw - 126 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kLeft + pw - 120 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">"
            << escape(series[si].label) << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace periflow
