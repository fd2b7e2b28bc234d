#pragma once

#include <vector>

#include "abc/model.hpp"

namespace abc {

/// Univariate normal data N(mu, sigma^2) summarised by exponentiated sample
/// quantiles s_j = exp(qhat_{alpha_j} / 2). Parameter theta = (mu, sigma)
/// with sigma the standard deviation; sigma <= 0 is outside the domain.
///
/// Two simulation paths produce identically distributed summaries:
///  - direct: draw all n observations and interpolate their order statistics;
///  - order_stats: draw only the handful of order statistics the quantiles
///    touch, exactly, via Dirichlet spacings of uniform order statistics
///    pushed through the normal quantile function.
/// The second costs O(d) per call instead of O(n log n), which is what makes
/// the large-budget experiments affordable. Both are deterministic given the
/// stream.
class GaussianQuantileModel : public Model {
public:
    enum class SimPath { direct, order_stats };

    GaussianQuantileModel(std::vector<double> alphas, std::size_t n,
                          BoxPrior prior, SimPath path = SimPath::direct);

    /// Prior box [-10,10]^2 as in the quantile study.
    static BoxPrior default_prior();

    int param_dim() const override { return 2; }
    int summary_dim() const override { return static_cast<int>(alphas_.size()); }
    std::size_t data_size() const override { return n_; }
    const BoxPrior& prior() const override { return prior_; }
    bool in_domain(const ParameterVector& theta) const override;

    SummaryVector simulate_summary(const ParameterVector& theta,
                                   RngStream& rng) const override;

    /// Draws one dataset of n observations.
    std::vector<double> simulate_data(const ParameterVector& theta, RngStream& rng) const;

    /// Summary of an existing dataset: exp(qhat_alpha / 2) per alpha.
    SummaryVector summary_from_data(std::span<const double> data) const;

    const std::vector<double>& alphas() const { return alphas_; }
    SimPath sim_path() const { return path_; }

private:
    SummaryVector simulate_direct(const ParameterVector& theta, RngStream& rng) const;
    SummaryVector simulate_order_stats(const ParameterVector& theta, RngStream& rng) const;

    std::vector<double> alphas_;
    std::size_t n_;
    BoxPrior prior_;
    SimPath path_;

    // Precomputed order-statistic plan: the sorted unique 1-based ranks the
    // quantile rule touches, the gamma shapes of the spacings between them,
    // and for each alpha the index pair + interpolation weight.
    std::vector<std::size_t> ranks_;
    std::vector<double> spacing_shapes_; // ranks_.size() + 1 entries
    struct QuantilePlan {
        std::size_t lo_idx;
        std::size_t hi_idx;
        double frac;
    };
    std::vector<QuantilePlan> plans_;
};

/// Quantile function of the standard normal (Wichura AS241, double precision).
double standard_normal_quantile(double p);

} // namespace abc
