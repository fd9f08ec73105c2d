#include "geci/data.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <map>
#include <mutex>

#include "geci/csv.hpp"
#include "geci/errors.hpp"
#include "geci/rng.hpp"

namespace geci {

namespace {

// Stream ids reserved for per-spec frozen draws (theta), far away from
// the replication streams handed out by the harness.
constexpr uint64_t kThetaStream = 0xge_theta_stream_placeholder;

}  // namespace

Dataset Dataset::subset(const std::vector<int>& rows) const {
    Dataset out;
    out.p = p;
    out.task = task;
    out.features.reserve(rows.size() * p);
    out.target.reserve(rows.size());
    for (int r : rows) {
        const auto i = std::size_t(r);
        out.features.insert(out.features.end(), features.begin() + long(i * p),
                            features.begin() + long((i + 1) * p));
        out.target.push_back(target[i]);
    }
    return out;
}

void Dataset::validate() const {
    if (target.empty()) throw ConfigError("dataset has no rows");
    if (features.size() != target.size() * p)
        throw ConfigError("feature matrix and target row counts differ");
    for (double v : features)
        if (!std::isfinite(v)) throw ConfigError("non-finite feature value");
    for (double y : target) {
        if (!std::isfinite(y)) throw ConfigError("non-finite target value");
        if (task == Task::classification && y != 0.0 && y != 1.0)
            throw ConfigError("classification target outside {0,1}");
    }
}

std::string DgpSpec::name() const {
    switch (kind) {
        case DgpKind::bates_regr: return "bates_regr_" + std::to_string(feature_count());
        case DgpKind::bates_classif: return "bates_classif_" + std::to_string(feature_count());
        case DgpKind::friedman1: return "friedman1";
        case DgpKind::chen_10: return "chen_10";
        case DgpKind::chen_10_null: return "chen_10_null";
        case DgpKind::cov_logistic: return "cov_logistic_" + std::to_string(feature_count());
        case DgpKind::tabular_file: return "tabular_file";
    }
    return "unknown";
}

Task DgpSpec::task() const {
    switch (kind) {
        case DgpKind::bates_classif:
        case DgpKind::cov_logistic: return Task::classification;
        case DgpKind::tabular_file: return Task::regression;  // refined on load
        default: return Task::regression;
    }
}

int DgpSpec::feature_count() const {
    switch (kind) {
        case DgpKind::bates_regr:
        case DgpKind::bates_classif:
            if (!theta.empty()) return int(theta.size());
            return p > 0 ? p : 20;
        case DgpKind::friedman1: return p > 0 ? p : 10;
        case DgpKind::chen_10:
        case DgpKind::chen_10_null: return 60;
        case DgpKind::cov_logistic: return p;
        case DgpKind::tabular_file: return p;
    }
    return p;
}

DgpSpec DgpSpec::parse_kind(const std::string& kind_name) {
    DgpSpec spec;
    if (kind_name == "bates_regr") spec.kind = DgpKind::bates_regr;
    else if (kind_name == "bates_classif") spec.kind = DgpKind::bates_classif;
    else if (kind_name == "friedman1") spec.kind = DgpKind::friedman1;
    else if (kind_name == "chen_10") spec.kind = DgpKind::chen_10;
    else if (kind_name == "chen_10_null") spec.kind = DgpKind::chen_10_null;
    else if (kind_name == "cov_logistic") spec.kind = DgpKind::cov_logistic;
    else if (kind_name == "tabular_file") spec.kind = DgpKind::tabular_file;
    else throw UsageError("unknown DGP kind: " + kind_name);
    return spec;
}

std::vector<double> covariance_from_csv(const std::string& path, int& p_out) {
    const CsvTable table = read_csv(path);
    const std::size_t m = table.rows.size();
    const std::size_t p = table.header.size();
    if (m < 2) throw ConfigError("covariance estimation needs at least 2 rows: " + path);
    std::vector<double> mu(p, 0.0);
    for (const auto& row : table.rows)
        for (std::size_t j = 0; j < p; ++j) mu[j] += row[j];
    for (auto& v : mu) v /= double(m);
    std::vector<double> cov(p * p, 0.0);
    for (const auto& row : table.rows)
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b)
                cov[a * p + b] += (row[a] - mu[a]) * (row[b] - mu[b]);
    for (auto& v : cov) v /= double(m - 1);
    p_out = int(p);
    return cov;
}

namespace {

std::vector<double> default_bates_theta(int p) {
    std::vector<double> theta(std::size_t(p), 0.0);
    for (int j = 0; j < std::min(5, p); ++j) theta[std::size_t(j)] = 1.0;
    return theta;
}

// theta_j = Z_j / sqrt(var(X_j)) with Z_j discrete uniform over
// {-3,-2,-1,-0.5,0,0.5,1,2,3}, drawn once per spec and frozen.
std::vector<double> cov_logistic_theta(const DgpSpec& spec, int p) {
    static const double levels[] = {-3, -2, -1, -0.5, 0, 0.5, 1, 2, 3};
    Rng rng(spec.seed, kThetaStream);
    std::vector<double> theta(std::size_t(p));
    for (int j = 0; j < p; ++j) {
        const double var_j = spec.sigma[std::size_t(j) * std::size_t(p) + std::size_t(j)];
        if (!(var_j > 0)) throw ConfigError("cov_logistic: nonpositive feature variance");
        theta[std::size_t(j)] = levels[rng.next_below(9)] / std::sqrt(var_j);
    }
    return theta;
}

Eigen::MatrixXd cholesky_factor(const std::vector<double>& sigma, int p) {
    Eigen::MatrixXd S(p, p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) S(a, b) = sigma[std::size_t(a) * std::size_t(p) + std::size_t(b)];
    const double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
    if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw ConfigError("cov_logistic: covariance matrix is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    // PSD-but-singular matrices are admitted through a tiny diagonal jitter.
    Eigen::MatrixXd Sj = S + 1e-10 * scale * Eigen::MatrixXd::Identity(p, p);
    Eigen::LLT<Eigen::MatrixXd> retry(Sj);
    if (retry.info() != Eigen::Success)
        throw ConfigError("cov_logistic: covariance matrix is not positive semi-definite");
    return retry.matrixL();
}

const CsvTable& cached_table(const std::string& path) {
    static std::mutex mu;
    static std::map<std::string, CsvTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it == cache.end()) it = cache.emplace(path, read_csv(path)).first;
    return it->second;
}

Dataset generate_tabular(const DgpSpec& spec, std::size_t n, uint64_t stream) {
    if (spec.path.empty()) throw ConfigError("tabular_file: no path configured");
    if (spec.target_column.empty()) throw ConfigError("tabular_file: no target column configured");
    const CsvTable& table = cached_table(spec.path);
    const int ty = table.column(spec.target_column);
    if (ty < 0) throw ConfigError("tabular_file: target column '" + spec.target_column + "' missing");
    // Stream 0 owns the reserved leading validation block; stream r >= 1
    // consumes the r-th disjoint chunk after it. No row is ever reused.
    std::size_t begin;
    if (stream == 0) {
        if (n > spec.val_rows && spec.val_rows != 0)
            throw ResourceError("tabular_file: validation request exceeds reserved block");
        begin = 0;
    } else {
        begin = spec.val_rows + (stream - 1) * n;
    }
    if (begin + n > table.rows.size())
        throw ResourceError("tabular_file: not enough disjoint rows left in " + spec.path);
    Dataset data;
    data.p = table.header.size() - 1;
    data.features.reserve(n * data.p);
    data.target.reserve(n);
    bool binary = true;
    for (std::size_t i = begin; i < begin + n; ++i) {
        const auto& row = table.rows[i];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (int(j) != ty) data.features.push_back(row[j]);
        const double y = row[std::size_t(ty)];
        if (y != 0.0 && y != 1.0) binary = false;
        data.target.push_back(y);
    }
    data.task = binary ? Task::classification : Task::regression;
    data.validate();
    return data;
}

}  // namespace

Dataset generate(const DgpSpec& spec, std::size_t n, uint64_t stream) {
    if (n < 1) throw UsageError("generate: n must be >= 1");
    if (spec.kind == DgpKind::tabular_file) return generate_tabular(spec, n, stream);

    Dataset data;
    data.task = spec.task();
    const Rng base(spec.seed, stream);

    switch (spec.kind) {
        case DgpKind::bates_regr:
        case DgpKind::bates_classif: {
            const int p = spec.feature_count();
            const std::vector<double> theta =
                spec.theta.empty() ? default_bates_theta(p) : spec.theta;
            if (int(theta.size()) != p) throw ConfigError("bates: theta length does not match p");
            data.p = std::size_t(p);
            data.features.resize(n * data.p);
            data.target.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                Rng row = base.split(i);
                double lin = 0.0;
                for (int j = 0; j < p; ++j) {
                    const double xij = row.next_normal();
                    data.x(i, std::size_t(j)) = xij;
                    lin += xij * theta[std::size_t(j)];
                }
                if (spec.kind == DgpKind::bates_regr) {
                    data.target[i] = lin + spec.noise_sd * row.next_normal();
                } else {
                    const double prob = 1.0 / (1.0 + std::exp(-lin));
                    data.target[i] = row.next_double() < prob ? 1.0 : 0.0;
                }
            }
            break;
        }
        case DgpKind::friedman1: {
            const int p = spec.feature_count();
            if (p < 5) throw ConfigError("friedman1: needs at least 5 features");
            data.p = std::size_t(p);
            data.features.resize(n * data.p);
            data.target.resize(n);
            constexpr double pi = 3.14159265358979323846;
            for (std::size_t i = 0; i < n; ++i) {
                Rng row = base.split(i);
                for (int j = 0; j < p; ++j) data.x(i, std::size_t(j)) = row.next_double();
                const double x1 = data.x(i, 0), x2 = data.x(i, 1), x3 = data.x(i, 2);
                data.target[i] = 10.0 * std::sin(pi * x1 * x2) + 20.0 * (x3 - 0.5) * (x3 - 0.5) +
                                 10.0 * data.x(i, 3) + 5.0 * data.x(i, 4) +
                                 spec.noise_sd * row.next_normal();
            }
            break;
        }
        case DgpKind::chen_10:
        case DgpKind::chen_10_null: {
            // 6 latent uniforms expand into 60 features; the null variant
            // replays the identical feature draws and rewires only the
            // target to independent latents.
            data.p = 60;
            data.features.resize(n * 60);
            data.target.resize(n);
            const double eps_sd = 0.2;    // N(0, 0.04)
            const double z_sd = 0.3;      // N(0, 0.09)
            const double null_sd = std::sqrt(0.2);
            for (std::size_t i = 0; i < n; ++i) {
                Rng row = base.split(i);
                double lat[6];
                for (double& v : lat) v = row.next_double();
                for (int l = 0; l < 6; ++l)
                    for (int j = 0; j < 10; ++j)
                        data.x(i, std::size_t(l * 10 + j)) =
                            lat[l] + (0.01 + 0.5 * j / 10.0) * z_sd * row.next_normal();
                const double eps = eps_sd * row.next_normal();
                double s1 = lat[0], s2 = lat[1], s3 = lat[2];
                if (spec.kind == DgpKind::chen_10_null) {
                    s1 = null_sd * row.next_normal();
                    s2 = null_sd * row.next_normal();
                    s3 = null_sd * row.next_normal();
                }
                data.target[i] = 0.25 * std::exp(4.0 * s1) +
                                 4.0 / (1.0 + std::exp(-20.0 * (s2 - 0.5))) + 3.0 * s3 + eps;
            }
            break;
        }
        case DgpKind::cov_logistic: {
            const int p = spec.p;
            if (p < 1) throw ConfigError("cov_logistic: feature count not configured");
            if (int(spec.sigma.size()) != p * p)
                throw ConfigError("cov_logistic: sigma must be p x p");
            const Eigen::MatrixXd L = cholesky_factor(spec.sigma, p);
            const std::vector<double> theta =
                spec.theta.empty() ? cov_logistic_theta(spec, p) : spec.theta;
            if (int(theta.size()) != p) throw ConfigError("cov_logistic: theta length mismatch");
            data.p = std::size_t(p);
            data.features.resize(n * data.p);
            data.target.resize(n);
            Eigen::VectorXd z(p);
            for (std::size_t i = 0; i < n; ++i) {
                Rng row = base.split(i);
                for (int j = 0; j < p; ++j) z(j) = row.next_normal();
                const Eigen::VectorXd xi = L * z;
                double lin = 0.0;
                for (int j = 0; j < p; ++j) {
                    data.x(i, std::size_t(j)) = xi(j);
                    lin += xi(j) * theta[std::size_t(j)];
                }
                const double prob = 1.0 / (1.0 + std::exp(-lin));
                data.target[i] = row.next_double() < prob ? 1.0 : 0.0;
            }
            break;
        }
        case DgpKind::tabular_file: break;  // handled above
    }
    data.validate();
    return data;
}

}  // namespace geci
