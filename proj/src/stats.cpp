#include "geci/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geci/errors.hpp"

namespace geci {

double normal_quantile(double q) {
    if (!(q > 0.0 && q < 1.0)) throw UsageError("normal_quantile: q must lie in (0,1)");
    // AS 241, PPND16.
    const double p = q - 0.5;
    if (std::fabs(p) <= 0.425) {
        const double r = 0.180625 - p * p;
        return p *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (p < 0) ? q : 1.0 - q;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                  3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (p < 0) ? -val : val;
}

namespace {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Modified Lentz continued fraction for the incomplete beta.
double incbeta_cf(double x, double a, double b) {
    const double tiny = 1e-300;
    const double eps = 1e-15;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 1000; ++m) {
        const double m2 = 2.0 * m;
        double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < eps) break;
    }
    return h;
}

double t_cdf(double x, double df) {
    if (x == 0.0) return 0.5;
    const double z = df / (df + x * x);
    const double p = 0.5 * reg_incomplete_beta(z, 0.5 * df, 0.5);
    return (x > 0) ? 1.0 - p : p;
}

}  // namespace

double reg_incomplete_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0)) throw UsageError("reg_incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * incbeta_cf(x, a, b) / a;
    return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(b, a)) *
                     incbeta_cf(1.0 - x, b, a) / b;
}

double t_quantile(double df, double q) {
    if (!(df >= 1.0)) throw UsageError("t_quantile: df must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw UsageError("t_quantile: q must lie in (0,1)");
    if (q == 0.5) return 0.0;
    // Bracket, then bisect the CDF.
    double lo = -1.0, hi = 1.0;
    while (t_cdf(lo, df) > q) lo *= 2.0;
    while (t_cdf(hi, df) < q) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (t_cdf(mid, df) < q)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-10 * std::max(1.0, std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

double empirical_quantile(std::span<const double> values, double q) {
    if (values.empty()) throw UsageError("empirical_quantile: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw UsageError("empirical_quantile: q outside [0,1]");
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end());
    const std::size_t m = x.size();
    if (m == 1) return x[0];
    const double h = double(m - 1) * q;
    const std::size_t lo = std::size_t(h);
    if (lo + 1 >= m) return x[m - 1];
    const double frac = h - double(lo);
    return x[lo] + frac * (x[lo + 1] - x[lo]);
}

double csum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double mean(std::span<const double> values) {
    if (values.empty()) throw UsageError("mean: empty sample");
    return csum(values) / double(values.size());
}

double sample_variance(std::span<const double> values) {
    const std::size_t m = values.size();
    if (m < 2) throw DegenerateInput("sample_variance: need at least 2 values");
    const double mu = mean(values);
    std::vector<double> sq(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double d = values[i] - mu;
        sq[i] = d * d;
    }
    return csum(sq) / double(m - 1);
}

double sample_sd(std::span<const double> values) { return std::sqrt(sample_variance(values)); }

double median(std::span<const double> values) { return empirical_quantile(values, 0.5); }

}  // namespace geci
