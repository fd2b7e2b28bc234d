#pragma once

#include <span>
#include <stdexcept>

#include "abc/box_prior.hpp"
#include "abc/rng.hpp"
#include "abc/summary_limit.hpp"

namespace abc {

struct MlesOptions {
    bool include_logdet = true; // use the full synthetic likelihood -1/2 log|A/n| term
    int restarts = 5;           // random restarts drawn from the prior box
    int max_iters = 500;
    double tol = 1e-8;
};

/// Thrown when no Nelder-Mead start converged within its budget; carries the
/// best iterate found so callers can still inspect it.
class MlesNonConvergence : public std::runtime_error {
public:
    MlesNonConvergence(std::string what, ParameterVector best)
        : std::runtime_error(std::move(what)), best_iterate(std::move(best)) {}
    ParameterVector best_iterate;
};

/// Maximiser of the Gaussian synthetic log-likelihood
///   log N(s_obs; s(theta), A(theta)/n)
/// over the prior box, by multi-start Nelder-Mead. theta_init is the first
/// start; `opts.restarts` further starts are drawn uniformly from the box.
ParameterVector mles(const SummaryLimit& limit, const SummaryVector& s_obs, std::size_t n,
                     const ParameterVector& theta_init, const BoxPrior& box,
                     const MlesOptions& opts, RngStream& rng);

/// Synthetic log-likelihood value itself (exposed for tests).
double synthetic_loglik(const SummaryLimit& limit, const SummaryVector& s_obs,
                        std::size_t n, const ParameterVector& theta, bool include_logdet);

/// Closed-form normal MLE: (sample mean, sample standard deviation with 1/n).
ParameterVector mle_gaussian(std::span<const double> data);

} // namespace abc
