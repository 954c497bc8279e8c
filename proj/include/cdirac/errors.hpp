#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cdirac {

/// Input outside the mathematical domain of an operation (x <= 0 for gamma, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Aggregated parameter-validation failure; lists every violated constraint.
struct ValidationError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid parameters:";
        for (const auto& e : v) { s += " ["; s += e; s += "]"; }
        return s;
    }
};

/// A requested bound state does not exist for the given parameters.
struct NoSolutionError : std::runtime_error {
    int n_max;  // largest radial quantum number with a bound state, -1 if none
    explicit NoSolutionError(const std::string& msg, int n_max_ = -1)
        : std::runtime_error(msg), n_max(n_max_) {}
};

/// Root bracketing failed (no sign change over the supplied interval).
struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Quadrature failed to reach the requested tolerance; carries the best estimate.
struct AccuracyError : std::runtime_error {
    double best_estimate;
    double error_estimate;
    AccuracyError(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
};

/// Internal cross-check between two routes to the same quantity failed.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cdirac
