#pragma once

#include <stdexcept>
#include <string>

namespace geci {

/// Caller broke a contract (bad arguments, malformed method string).
/// The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration (e.g. covariance matrix not PSD).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A resource ran out (e.g. tabular file exhausted).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is structurally valid but statistically degenerate
/// (n_test < 2 for a variance, empty out-of-bag set). The harness
/// absorbs these per replication and imputes.
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geci
