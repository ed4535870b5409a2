#ifndef PERIFLOW_ERRORS_HPP
#define PERIFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace periflow {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameter values. Aggregates every violated constraint.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : Error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid parameters:";
        for (const auto& s : v) out += "\n  - " + s;
        return out;
    }
    std::vector<std::string> issues_;
};

/// A closed-form denominator degenerated (parameters sit on a resonance).
class ResonanceError : public Error {
public:
    using Error::Error;
};

/// The wall geometry terms degenerated (Q - 1 below tolerance).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// A numerical solve could not produce a trustworthy answer.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Every point of a sweep failed.
class SweepError : public Error {
public:
    using Error::Error;
};

/// Configuration file / CLI input problems.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace periflow

#endif
