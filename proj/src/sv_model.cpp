#include "abc/sv_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace abc {

SVModel::SVModel(std::size_t n, BoxPrior prior) : n_(n), prior_(std::move(prior)) {
    if (n_ < 2) {
        throw std::invalid_argument("SVModel: data size must be >= 2");
    }
    if (prior_.dim() != 3) {
        throw std::invalid_argument("SVModel: prior must be 3-dimensional");
    }
}

BoxPrior SVModel::default_prior() {
    Eigen::VectorXd lo(3), hi(3);
    lo << 0.0, 0.1, -10.0;
    hi << 1.0, 3.0, -1.0;
    return BoxPrior(lo, hi);
}

bool SVModel::in_domain(const ParameterVector& theta) const {
    return theta.size() == 3 && std::abs(theta[0]) < 1.0 && theta[1] > 0.0;
}

SummaryVector SVModel::simulate_summary(const ParameterVector& theta,
                                        RngStream& rng) const {
    if (!in_domain(theta)) {
        throw std::domain_error("SVModel: need |phi| < 1 and sigma_eta > 0");
    }
    const double phi = theta[0];
    const double sigma_eta = theta[1];
    const double two_log_sbar = 2.0 * theta[2];
    constexpr double tiny = std::numeric_limits<double>::min();

    double x = rng.normal() * sigma_eta / std::sqrt(1.0 - phi * phi);

    // Single pass over y*_t accumulating the moments the summaries need.
    double sum = 0.0, sum_sq = 0.0, sum_lag = 0.0;
    double y_first = 0.0, y_prev = 0.0;
    for (std::size_t t = 0; t < n_; ++t) {
        x = phi * x + sigma_eta * rng.normal();
        const double xi = rng.normal();
        const double y = two_log_sbar + x + std::log(std::max(xi * xi, tiny));
        sum += y;
        sum_sq += y * y;
        if (t == 0) {
            y_first = y;
        } else {
            sum_lag += y * y_prev;
        }
        y_prev = y;
    }
    const double n = static_cast<double>(n_);
    const double m = sum / n;
    const double var = sum_sq / n - m * m;
    const double num = sum_lag - m * (2.0 * sum - y_first - y_prev) + (n - 1.0) * m * m;
    const double den = sum_sq - n * m * m;

    SummaryVector s(3);
    s << var, num / den, m;
    return s;
}

std::vector<double> SVModel::simulate_log_squared_returns(const ParameterVector& theta,
                                                          RngStream& rng) const {
    if (!in_domain(theta)) {
        throw std::domain_error("SVModel: need |phi| < 1 and sigma_eta > 0");
    }
    const double phi = theta[0];
    const double sigma_eta = theta[1];
    const double two_log_sbar = 2.0 * theta[2];
    constexpr double tiny = std::numeric_limits<double>::min();

    double x = rng.normal() * sigma_eta / std::sqrt(1.0 - phi * phi);
    std::vector<double> ystar(n_);
    for (std::size_t t = 0; t < n_; ++t) {
        x = phi * x + sigma_eta * rng.normal();
        const double xi = rng.normal();
        ystar[t] = two_log_sbar + x + std::log(std::max(xi * xi, tiny));
    }
    return ystar;
}

} // namespace abc
