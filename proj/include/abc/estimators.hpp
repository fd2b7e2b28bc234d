#pragma once

#include <functional>

#include "abc/sampler.hpp"

namespace abc {

/// Point estimate and Monte Carlo diagnostics of one sampler run.
struct EstimatorReport {
    Eigen::VectorXd h_hat;        // self-normalised posterior mean of h
    double ess = 0.0;             // (sum w)^2 / sum w^2 over accepted particles
    std::size_t n_acc = 0;
    double p_acc_hat = 0.0;       // n_acc / n_proposed
    Eigen::VectorXd sigma_is_hat; // per-coordinate plug-in IS variance
    Eigen::VectorXd mcv_hat;      // per-coordinate Monte Carlo variance
};

using HFunction = std::function<Eigen::VectorXd(const ParameterVector&)>;

/// h(theta) = theta.
HFunction identity_h();

/// Weighted mean of h over accepted particles. Invariant under rescaling of
/// all weights. Throws std::invalid_argument when total weight is zero.
Eigen::VectorXd posterior_mean(const PosteriorSample& sample, const HFunction& h);

/// (sum w)^2 / sum w^2; equals the particle count iff all weights are equal.
double ess(const PosteriorSample& sample);

/// Self-normalised plug-in for the IS variance Sigma_IS:
/// N_acc * sum_i wbar_i^2 (h_i - h_hat)^2 with wbar normalised to sum 1.
Eigen::VectorXd is_variance_hat(const PosteriorSample& sample, const HFunction& h,
                                const Eigen::VectorXd& h_hat);

/// Monte Carlo variance (1/N) * sigma_is / p_acc.
Eigen::VectorXd mc_variance_hat(const Eigen::VectorXd& sigma_is_hat, double p_acc_hat,
                                std::size_t n_proposed);

/// AV_MLES / (AV + MCV). All inputs must be positive (mcv may be zero).
double efficiency_ratio(double av_mles, double av_hat, double mcv_hat);

/// Full report for one run.
EstimatorReport make_report(const PosteriorSample& sample, const HFunction& h);

/// Per-coordinate mean squared error of a stack of estimates against the
/// known truth, plus MSE * n.
struct MseTable {
    Eigen::VectorXd mse;
    Eigen::VectorXd mse_times_n;
    std::size_t replicates = 0;
};

MseTable mse_table(const std::vector<Eigen::VectorXd>& estimates,
                   const ParameterVector& truth, std::size_t n);

} // namespace abc
