#include "abc/gaussian_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "abc/stats.hpp"

namespace abc {

double standard_normal_quantile(double p) {
    static const boost::math::normal_distribution<double> unit{};
    return boost::math::quantile(unit, p);
}

GaussianQuantileModel::GaussianQuantileModel(std::vector<double> alphas, std::size_t n,
                                             BoxPrior prior, SimPath path)
    : alphas_(std::move(alphas)), n_(n), prior_(std::move(prior)), path_(path) {
    if (alphas_.empty()) {
        throw std::invalid_argument("GaussianQuantileModel: need at least one alpha");
    }
    if (n_ < 2) {
        throw std::invalid_argument("GaussianQuantileModel: data size must be >= 2");
    }
    double prev = 0.0;
    for (double a : alphas_) {
        if (!(a > prev && a < 1.0)) {
            throw std::invalid_argument(
                "GaussianQuantileModel: alphas must be strictly increasing in (0,1)");
        }
        prev = a;
    }
    if (prior_.dim() != 2) {
        throw std::invalid_argument("GaussianQuantileModel: prior must be 2-dimensional");
    }

    // Order-statistic plan for the interpolation rule h = (n-1)*alpha + 1.
    for (const double a : alphas_) {
        const double h = static_cast<double>(n_ - 1) * a + 1.0;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        ranks_.push_back(lo);
        if (h > static_cast<double>(lo)) ranks_.push_back(lo + 1);
    }
    std::sort(ranks_.begin(), ranks_.end());
    ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
    for (const double a : alphas_) {
        const double h = static_cast<double>(n_ - 1) * a + 1.0;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const double frac = h - static_cast<double>(lo);
        auto find = [this](std::size_t rank) {
            return static_cast<std::size_t>(
                std::lower_bound(ranks_.begin(), ranks_.end(), rank) - ranks_.begin());
        };
        plans_.push_back({find(lo), frac > 0.0 ? find(lo + 1) : find(lo), frac});
    }
    spacing_shapes_.reserve(ranks_.size() + 1);
    std::size_t prev_rank = 0;
    for (std::size_t r : ranks_) {
        spacing_shapes_.push_back(static_cast<double>(r - prev_rank));
        prev_rank = r;
    }
    spacing_shapes_.push_back(static_cast<double>(n_ + 1 - prev_rank));
}

BoxPrior GaussianQuantileModel::default_prior() {
    Eigen::VectorXd lo(2), hi(2);
    lo << -10.0, -10.0;
    hi << 10.0, 10.0;
    return BoxPrior(lo, hi);
}

bool GaussianQuantileModel::in_domain(const ParameterVector& theta) const {
    return theta.size() == 2 && theta[1] > 0.0;
}

SummaryVector GaussianQuantileModel::simulate_summary(const ParameterVector& theta,
                                                      RngStream& rng) const {
    if (!in_domain(theta)) {
        throw std::domain_error("GaussianQuantileModel: sigma must be positive");
    }
    return path_ == SimPath::direct ? simulate_direct(theta, rng)
                                    : simulate_order_stats(theta, rng);
}

std::vector<double> GaussianQuantileModel::simulate_data(const ParameterVector& theta,
                                                         RngStream& rng) const {
    if (!in_domain(theta)) {
        throw std::domain_error("GaussianQuantileModel: sigma must be positive");
    }
    std::vector<double> data(n_);
    for (double& x : data) {
        x = theta[0] + theta[1] * rng.normal();
    }
    return data;
}

SummaryVector GaussianQuantileModel::summary_from_data(std::span<const double> data) const {
    const std::vector<double> q = sample_quantiles(data, alphas_);
    SummaryVector s(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
        s[static_cast<int>(j)] = std::exp(0.5 * q[j]);
    }
    return s;
}

SummaryVector GaussianQuantileModel::simulate_direct(const ParameterVector& theta,
                                                     RngStream& rng) const {
    return summary_from_data(simulate_data(theta, rng));
}

SummaryVector GaussianQuantileModel::simulate_order_stats(const ParameterVector& theta,
                                                          RngStream& rng) const {
    // Uniform order statistics via gamma spacings: with G_i ~ Gamma(shape_i),
    // U_(k_i) = (G_1 + ... + G_i) / (G_1 + ... + G_{m+1}).
    const std::size_t m = ranks_.size();
    thread_local std::vector<double> cumsum;
    cumsum.resize(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        total += rng.gamma(spacing_shapes_[i]);
        cumsum[i] = total;
    }
    total += rng.gamma(spacing_shapes_[m]);

    SummaryVector s(static_cast<int>(alphas_.size()));
    thread_local std::vector<double> xs;
    xs.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = theta[0] + theta[1] * standard_normal_quantile(cumsum[i] / total);
    }
    for (std::size_t j = 0; j < plans_.size(); ++j) {
        const QuantilePlan& plan = plans_[j];
        const double q = (1.0 - plan.frac) * xs[plan.lo_idx] + plan.frac * xs[plan.hi_idx];
        s[static_cast<int>(j)] = std::exp(0.5 * q);
    }
    return s;
}

} // namespace abc
