#ifndef PERIFLOW_CSV_HPP
#define PERIFLOW_CSV_HPP

/**
 * @file csv.hpp
 * @brief CSV output: '#' header comments carrying run metadata, then
 *        two-column data rows in full double precision.
 */

#include <string>
#include <utility>
#include <vector>

#include "periflow/params.hpp"

namespace periflow {

/// Shortest locale-independent representation that round-trips to the same
/// double.
std::string format_double(double v);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Metadata block for a parameter set (keys match the config-file grammar).
Metadata params_metadata(const FlowParameters& p, double dp2_mean);

/// Writes `# key=value` header lines followed by `xname,yname` rows.
/// Throws ConfigError on I/O failure.
void write_series_csv(const std::string& path, const Metadata& metadata,
                      const std::string& xname, const std::string& yname,
                      const std::vector<std::pair<double, double>>& rows);

}  // namespace periflow

#endif
