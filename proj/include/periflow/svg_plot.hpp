#ifndef PERIFLOW_SVG_PLOT_HPP
#define PERIFLOW_SVG_PLOT_HPP

/// Minimal self-contained SVG line plots (no display server, no external
/// renderer). Output is deterministic for identical inputs.

#include <string>
#include <utility>
#include <vector>

namespace periflow {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_x = false;
};

void write_line_plot(const std::string& path, const PlotOptions& options,
                     const std::vector<PlotSeries>& series);

}  // namespace periflow

#endif
