#pragma once

#include <functional>
#include <vector>

#include "abc/types.hpp"

namespace abc {

/// Large-n limit of a summary statistic: a_n (S_n - s(theta)) -> N(0, A(theta)),
/// together with the Jacobian Ds(theta) (d x p). Both shipped models have
/// a_n = sqrt(n); third-party models may override the rate.
struct SummaryLimit {
    int d = 0;
    int p = 0;
    std::function<SummaryVector(const ParameterVector&)> s;
    std::function<Eigen::MatrixXd(const ParameterVector&)> A;
    std::function<Eigen::MatrixXd(const ParameterVector&)> Ds;
    std::function<double(std::size_t)> a_n = [](std::size_t n) {
        return std::sqrt(static_cast<double>(n));
    };
};

/// Analytic limit for the exponentiated-quantile summaries of N(mu, sigma^2):
/// s_j = exp((mu + sigma z_j)/2) with z_j the standard normal quantile of
/// alpha_j, Ds from differentiating that expression, and A the classical
/// sample-quantile asymptotic covariance pushed through the delta method.
SummaryLimit gaussian_limit(std::vector<double> alphas);

/// I(theta) = Ds' A^{-1} Ds, symmetrised. Throws std::runtime_error when
/// A(theta) is not positive definite.
Eigen::MatrixXd fisher_info_summary(const SummaryLimit& limit, const ParameterVector& theta);

/// C = Ds(theta0)' A(theta0)^{-1}, the p x d projection that preserves the
/// information of the full summary. Requires d >= p.
Eigen::MatrixXd reduction_matrix(const SummaryLimit& limit, const ParameterVector& theta0);

/// C * s.
SummaryVector reduce_summary(const Eigen::MatrixXd& C, const SummaryVector& s);

/// (1/a_n^2) Dh' I(theta0)^{-1} Dh: the asymptotic variance of a smooth
/// functional h of the summary-based estimators.
double asymptotic_variance(const SummaryLimit& limit, const ParameterVector& theta0,
                           const Eigen::VectorXd& dh, std::size_t n);

} // namespace abc
