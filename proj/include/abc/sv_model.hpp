#pragma once

#include <vector>

#include "abc/model.hpp"

namespace abc {

/// AR(1) stochastic volatility model
///   x_t = phi * x_{t-1} + eta_t,        eta_t ~ N(0, sigma_eta^2)
///   y_t = sigma_bar * exp(x_t / 2) * xi_t,  xi_t ~ N(0, 1)
/// with parameter theta = (phi, sigma_eta, log sigma_bar) and x_0 drawn from
/// the stationary law N(0, sigma_eta^2 / (1 - phi^2)).
///
/// Summaries are computed on the linearised series y*_t = log y_t^2:
/// (empirical variance, lag-1 autocorrelation, mean). y_t^2 is floored at the
/// smallest positive normal double before the log, so y* is always finite.
class SVModel : public Model {
public:
    SVModel(std::size_t n, BoxPrior prior);
    explicit SVModel(std::size_t n) : SVModel(n, default_prior()) {}

    /// Prior box [0,1) x [0.1,3] x [-10,-1] over (phi, sigma_eta, log sigma_bar).
    static BoxPrior default_prior();

    int param_dim() const override { return 3; }
    int summary_dim() const override { return 3; }
    std::size_t data_size() const override { return n_; }
    const BoxPrior& prior() const override { return prior_; }
    bool in_domain(const ParameterVector& theta) const override;

    SummaryVector simulate_summary(const ParameterVector& theta,
                                   RngStream& rng) const override;

    /// Simulates the linearised series y*_t (length n).
    std::vector<double> simulate_log_squared_returns(const ParameterVector& theta,
                                                     RngStream& rng) const;

private:
    std::size_t n_;
    BoxPrior prior_;
};

} // namespace abc
