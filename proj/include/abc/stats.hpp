#pragma once

#include <span>
#include <vector>

namespace abc {

/// Sample quantile by linear interpolation of order statistics at position
/// h = (n-1)*alpha + 1 (1-based). Throws std::invalid_argument for empty
/// data or alpha outside (0,1).
double sample_quantile(std::span<const double> data, double alpha);

/// As above for several probabilities at once; sorts the data a single time.
std::vector<double> sample_quantiles(std::span<const double> data,
                                     std::span<const double> alphas);

/// sum_{t=2..n} (y_t - ybar)(y_{t-1} - ybar) / sum_t (y_t - ybar)^2.
/// Throws std::invalid_argument if n < 2 or the empirical variance is zero.
double lag1_autocorrelation(std::span<const double> data);

double mean(std::span<const double> data);

/// Variance with 1/n divisor.
double variance(std::span<const double> data);

} // namespace abc
