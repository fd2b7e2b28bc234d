#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "abc/kernel.hpp"
#include "abc/model.hpp"
#include "abc/proposal.hpp"
#include "abc/types.hpp"

namespace abc {

/// Bandwidth choice: either a fixed epsilon or the distance quantile hitting
/// a target acceptance rate.
struct BandwidthRule {
    enum class Mode { fixed_eps, acceptance_rate };
    Mode mode = Mode::fixed_eps;
    double value = 1.0;

    static BandwidthRule fixed(double eps) {
        if (!(eps > 0.0)) throw std::invalid_argument("BandwidthRule: eps must be > 0");
        return {Mode::fixed_eps, eps};
    }
    static BandwidthRule rate(double p) {
        if (!(p > 0.0 && p < 1.0)) {
            throw std::invalid_argument("BandwidthRule: rate must be in (0,1)");
        }
        return {Mode::acceptance_rate, p};
    }
};

/// The ceil(p*N)-th smallest distance. With the uniform kernel this accepts
/// a fraction in [p, p + ties/N]. Throws std::invalid_argument on empty input.
double select_bandwidth(std::span<const double> distances, double p);

/// Output of one sampler run: the accepted particles, how many parameters
/// were proposed, the realised bandwidth, and the seed that reproduces it.
struct PosteriorSample {
    std::vector<WeightedParticle> particles; // accepted only
    std::size_t n_proposed = 0;
    std::size_t n_simulated = 0; // proposals with positive prior density & valid domain
    double bandwidth = 0.0;
    std::uint64_t seed = 0;
    Kernel kernel;

    double acceptance_rate() const {
        return static_cast<double>(particles.size()) / static_cast<double>(n_proposed);
    }
};

/// Thrown when a run accepts nothing; carries the realised bandwidth.
class EmptyAcceptance : public std::runtime_error {
public:
    explicit EmptyAcceptance(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Importance sampling ABC: propose N parameters from `proposal`, simulate
/// one summary per valid proposal, accept theta_i with probability
/// K_eps(s_i - s_obs) and weight it by prior/proposal. Proposals with zero
/// prior density (or outside the model domain) are never simulated or
/// accepted. In acceptance-rate mode epsilon is the distance quantile of the
/// realised run; invalid proposals count as infinitely distant.
///
/// Particle i draws from streams derive_stream(seed, 2i) (proposal and
/// simulation) and derive_stream(seed, 2i+1) (acceptance test), so results
/// are bit-identical for any worker count.
PosteriorSample is_abc(const Model& model, const SummaryVector& s_obs, const Kernel& kernel,
                       const ProposalSpec& proposal, const BandwidthRule& rule,
                       std::size_t n_proposals, std::uint64_t seed, int workers = 1);

/// Algorithm with the prior as proposal; all weights are 1.
PosteriorSample rejection_abc(const Model& model, const SummaryVector& s_obs,
                              const Kernel& kernel, const BandwidthRule& rule,
                              std::size_t n_proposals, std::uint64_t seed, int workers = 1);

/// Per-coordinate reciprocal variance of summaries simulated from prior
/// draws: a pilot-run choice of the kernel's Lambda diagonal for callers who
/// want standardised distances. Coordinates with zero variance get weight 1.
Eigen::VectorXd pilot_lambda(const Model& model, std::size_t n_pilot, std::uint64_t seed,
                             int workers = 1);

} // namespace abc
