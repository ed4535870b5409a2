#include "periflow/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "periflow/csv.hpp"

namespace periflow {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const char* kFlowKeys[] = {"R", "alpha", "e", "k", "s", "eps", "dp2"};
const char* kSweepKeys[] = {"id", "label", "axis", "quantity", "values",
                            "min", "max", "count", "spacing", "y_samples",
                            "approximate"};

bool known_key(const std::string& key, bool sweep) {
    for (const char* k : kFlowKeys) {
        if (key == k) return true;
    }
    if (sweep) {
        for (const char* k : kSweepKeys) {
            if (key == k) return true;
        }
    }
    return false;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(item, what));
    }
    if (out.empty()) throw ConfigError(what + ": empty value list");
    return out;
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ConfigError(what + ": cannot parse '" + text + "' as a number");
    }
    return v;
}

KeyValues parse_kv_text(const std::string& text, const std::string& origin) {
    KeyValues kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << origin << ":" << lineno << ": expected key=value, got '" << t
               << "'";
            throw ConfigError(os.str());
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream os;
            os << origin << ":" << lineno << ": empty key";
            throw ConfigError(os.str());
        }
        kv[key] = value;
    }
    return kv;
}

KeyValues parse_kv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_kv_text(buf.str(), path);
}

void apply_flow_config(const KeyValues& kv, FlowParameters& p,
                       PressureSpec& pressure, bool allow_extra) {
    for (const auto& [key, value] : kv) {
        if (key == "R") p.reynolds_R = parse_double(value, key);
        else if (key == "alpha") p.wave_number_alpha = parse_double(value, key);
        else if (key == "e") p.porosity_e = parse_double(value, key);
        else if (key == "k") p.darcy_k = parse_double(value, key);
        else if (key == "s") p.slip_s = parse_double(value, key);
        else if (key == "eps") p.amplitude_ratio_eps = parse_double(value, key);
        else if (key == "dp2") pressure.dp2_mean = parse_double(value, key);
        else if (!allow_extra && !known_key(key, false)) {
            throw ConfigError("unknown configuration key '" + key +
                              "' (expected R, alpha, e, k, s, eps, dp2)");
        }
    }
}

SweepSpec sweep_spec_from_kv(const KeyValues& kv, const std::string& origin) {
    for (const auto& [key, value] : kv) {
        (void)value;
        if (!known_key(key, true)) {
            throw ConfigError(origin + ": unknown sweep key '" + key + "'");
        }
    }
    SweepSpec spec;
    PressureSpec pressure;
    apply_flow_config(kv, spec.base, pressure, /*allow_extra=*/true);
    spec.dp2_mean = validate(pressure).dp2_mean;

    const auto need = [&](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw ConfigError(origin + ": missing required sweep key '" +
                              std::string(key) + "'");
        }
        return it->second;
    };
    spec.axis = axis_from_string(need("axis"));
    spec.quantity = quantity_from_string(need("quantity"));
    if (const auto it = kv.find("id"); it != kv.end()) spec.id = it->second;
    if (const auto it = kv.find("label"); it != kv.end()) spec.label = it->second;
    if (const auto it = kv.find("y_samples"); it != kv.end()) {
        spec.y_samples = static_cast<int>(parse_double(it->second, "y_samples"));
    }
    if (const auto it = kv.find("approximate"); it != kv.end()) {
        if (it->second != "true" && it->second != "false") {
            throw ConfigError(origin + ": approximate must be true or false");
        }
        spec.approximate = it->second == "true";
    }

    if (const auto it = kv.find("values"); it != kv.end()) {
        spec.values = AxisSpec::explicit_values(
            parse_double_list(it->second, "values"));
    } else {
        const double lo = parse_double(need("min"), "min");
        const double hi = parse_double(need("max"), "max");
        const int count = static_cast<int>(parse_double(need("count"), "count"));
        Spacing spacing = Spacing::linear;
        if (const auto sp = kv.find("spacing"); sp != kv.end()) {
            if (sp->second == "log") spacing = Spacing::log;
            else if (sp->second != "linear") {
                throw ConfigError(origin + ": spacing must be linear or log");
            }
        }
        spec.values = AxisSpec::range(lo, hi, count, spacing);
    }
    return spec;
}

SweepSpec read_sweep_spec(const std::string& path) {
    return sweep_spec_from_kv(parse_kv_file(path), path);
}

std::string sweep_spec_to_text(const SweepSpec& spec) {
    std::ostringstream os;
    os << "# sweep specification\n";
    if (!spec.id.empty()) os << "id=" << spec.id << "\n";
    if (!spec.label.empty()) os << "label=" << spec.label << "\n";
    os << "axis=" << to_string(spec.axis) << "\n";
    os << "quantity=" << to_string(spec.quantity) << "\n";
    if (spec.values.explicit_list) {
        os << "values=";
        for (size_t i = 0; i < spec.values.list.size(); ++i) {
            if (i) os << ",";
            os << format_double(spec.values.list[i]);
        }
        os << "\n";
    } else {
        os << "min=" << format_double(spec.values.min) << "\n";
        os << "max=" << format_double(spec.values.max) << "\n";
        os << "count=" << spec.values.count << "\n";
        os << "spacing=" << (spec.values.spacing == Spacing::log ? "log" : "linear")
           << "\n";
    }
    os << "y_samples=" << spec.y_samples << "\n";
    os << "approximate=" << (spec.approximate ? "true" : "false") << "\n";
    os << "R=" << format_double(spec.base.reynolds_R) << "\n";
    os << "alpha=" << format_double(spec.base.wave_number_alpha) << "\n";
    os << "e=" << format_double(spec.base.porosity_e) << "\n";
    os << "k=" << format_double(spec.base.darcy_k) << "\n";
    os << "s=" << format_double(spec.base.slip_s) << "\n";
    os << "eps=" << format_double(spec.base.amplitude_ratio_eps) << "\n";
    os << "dp2=" << format_double(spec.dp2_mean) << "\n";
    return os.str();
}

void write_sweep_spec(const std::string& path, const SweepSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << sweep_spec_to_text(spec);
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace periflow
