#include "abc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abc {
namespace {

double interpolate_sorted(std::span<const double> sorted, double alpha) {
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * alpha; // 0-based position
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= n || frac == 0.0) {
        return sorted[std::min(lo, n - 1)];
    }
    return (1.0 - frac) * sorted[lo] + frac * sorted[lo + 1];
}

} // namespace

double sample_quantile(std::span<const double> data, double alpha) {
    if (data.empty()) {
        throw std::invalid_argument("sample_quantile: empty data");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("sample_quantile: alpha must be in (0,1)");
    }
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    return interpolate_sorted(sorted, alpha);
}

std::vector<double> sample_quantiles(std::span<const double> data,
                                     std::span<const double> alphas) {
    if (data.empty()) {
        throw std::invalid_argument("sample_quantiles: empty data");
    }
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0)) {
            throw std::invalid_argument("sample_quantiles: alpha must be in (0,1)");
        }
        out.push_back(interpolate_sorted(sorted, a));
    }
    return out;
}

double lag1_autocorrelation(std::span<const double> data) {
    const std::size_t n = data.size();
    if (n < 2) {
        throw std::invalid_argument("lag1_autocorrelation: need at least 2 points");
    }
    const double m = mean(data);
    double num = 0.0;
    double den = 0.0;
    den += (data[0] - m) * (data[0] - m);
    for (std::size_t t = 1; t < n; ++t) {
        num += (data[t] - m) * (data[t - 1] - m);
        den += (data[t] - m) * (data[t] - m);
    }
    if (den == 0.0) {
        throw std::invalid_argument("lag1_autocorrelation: zero variance");
    }
    return num / den;
}

double mean(std::span<const double> data) {
    double s = 0.0;
    for (double x : data) s += x;
    return s / static_cast<double>(data.size());
}

double variance(std::span<const double> data) {
    const double m = mean(data);
    double s = 0.0;
    for (double x : data) s += (x - m) * (x - m);
    return s / static_cast<double>(data.size());
}

} // namespace abc
