#ifndef PERIFLOW_CONFIG_HPP
#define PERIFLOW_CONFIG_HPP

/**
 * @file config.hpp
 * @brief Flat key=value configuration files.
 *
 * Grammar: one `key=value` per line; blank lines and lines starting with '#'
 * are ignored; whitespace around keys and values is trimmed. Two schemas use
 * it: plain parameter files (keys R, alpha, e, k, s, eps, dp2) and sweep
 * specifications (those plus axis/quantity/values or min/max/count/spacing,
 * y_samples, approximate, id, label). Sweep specs round-trip exactly.
 */

#include <map>
#include <string>

#include "periflow/params.hpp"
#include "periflow/sweep.hpp"

namespace periflow {

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_kv_file(const std::string& path);
KeyValues parse_kv_text(const std::string& text, const std::string& origin);

/// Applies parameter keys to (p, pressure). Unknown keys raise ConfigError
/// unless allow_extra is set (sweep files carry extra keys).
void apply_flow_config(const KeyValues& kv, FlowParameters& p,
                       PressureSpec& pressure, bool allow_extra = false);

SweepSpec sweep_spec_from_kv(const KeyValues& kv, const std::string& origin);
SweepSpec read_sweep_spec(const std::string& path);
std::string sweep_spec_to_text(const SweepSpec& spec);
void write_sweep_spec(const std::string& path, const SweepSpec& spec);

double parse_double(const std::string& text, const std::string& what);

}  // namespace periflow

#endif
