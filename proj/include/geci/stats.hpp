#pragma once

#include <span>
#include <vector>

namespace geci {

/// Quantile of the standard normal at q in (0,1). Wichura's AS 241
/// (PPND16), |error| < 1e-13 over the full range.
double normal_quantile(double q);

/// Quantile of Student's t with df >= 1 at q in (0,1). Bisection on the
/// CDF expressed through the regularized incomplete beta function;
/// tolerance 1e-10.
double t_quantile(double df, double q);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double reg_incomplete_beta(double x, double a, double b);

/// Empirical quantile with linear interpolation between order statistics:
/// h = (m-1)q, value = x_(floor(h)+1) + (h - floor(h)) * (x_(floor(h)+2) - x_(floor(h)+1)).
/// Input need not be sorted.
double empirical_quantile(std::span<const double> values, double q);

/// Neumaier-compensated sum and mean.
double csum(std::span<const double> values);
double mean(std::span<const double> values);

/// Unbiased sample variance (denominator m-1); requires m >= 2.
double sample_variance(std::span<const double> values);

/// Sample standard deviation (denominator m-1).
double sample_sd(std::span<const double> values);

double median(std::span<const double> values);

}  // namespace geci
