#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geci {

enum class Task { regression, classification };

/// An n x p feature matrix (row-major) with a numeric target.
/// Classification targets take values 0/1 only.
struct Dataset {
    std::vector<double> features;  // row-major, n * p
    std::vector<double> target;
    std::size_t p = 0;
    Task task = Task::regression;

    std::size_t n() const { return target.size(); }
    double x(std::size_t i, std::size_t j) const { return features[i * p + j]; }
    double& x(std::size_t i, std::size_t j) { return features[i * p + j]; }

    /// Rows picked by index, in order; duplicates are materialized so a
    /// bootstrap multiset weights downstream fits naturally.
    Dataset subset(const std::vector<int>& rows) const;

    /// Throws ConfigError on row-count mismatch, label violations, or
    /// non-finite entries.
    void validate() const;
};

enum class DgpKind {
    bates_regr,
    bates_classif,
    friedman1,
    chen_10,
    chen_10_null,
    cov_logistic,
    tabular_file,
};

struct DgpSpec {
    DgpKind kind = DgpKind::bates_regr;
    int p = 0;                    // 0 = kind default
    std::vector<double> theta;    // bates / cov_logistic; empty = kind default
    std::vector<double> sigma;    // cov_logistic: p x p row-major, optional
    double noise_sd = 1.0;        // bates_regr / friedman1
    uint64_t seed = 0;

    // tabular_file
    std::string path;
    std::string target_column;
    std::size_t val_rows = 0;  // reserved leading block served by stream 0

    std::string name() const;
    Task task() const;
    int feature_count() const;

    static DgpSpec parse_kind(const std::string& kind_name);
};

/// Estimate a covariance matrix (denominator m-1) from the rows of a
/// numeric CSV data file.
std::vector<double> covariance_from_csv(const std::string& path, int& p_out);

/// Draws n rows from the process. Pure in (spec, n, stream): repeated
/// calls are bit-identical, distinct streams are independent. For
/// tabular_file, stream 0 serves the reserved validation block and
/// stream r >= 1 the r-th disjoint chunk after it.
Dataset generate(const DgpSpec& spec, std::size_t n, uint64_t stream);

}  // namespace geci
