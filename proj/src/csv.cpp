#include "periflow/csv.hpp"

#include <charconv>
#include <fstream>

namespace periflow {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Metadata params_metadata(const FlowParameters& p, double dp2_mean) {
    return {
        {"R", format_double(p.reynolds_R)},
        {"alpha", format_double(p.wave_number_alpha)},
        {"e", format_double(p.porosity_e)},
        {"k", format_double(p.darcy_k)},
        {"s", format_double(p.slip_s)},
        {"eps", format_double(p.amplitude_ratio_eps)},
        {"dp2", format_double(dp2_mean)},
    };
}

void write_series_csv(const std::string& path, const Metadata& metadata,
                      const std::string& xname, const std::string& yname,
                      const std::vector<std::pair<double, double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    for (const auto& [key, value] : metadata) {
        out << "# " << key << "=" << value << "\n";
    }
    out << xname << "," << yname << "\n";
    for (const auto& [x, y] : rows) {
        out << format_double(x) << "," << format_double(y) << "\n";
    }
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace periflow
