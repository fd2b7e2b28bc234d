#include "abc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abc/parallel.hpp"

namespace abc {

double select_bandwidth(std::span<const double> distances, double p) {
    if (distances.empty()) {
        throw std::invalid_argument("select_bandwidth: empty distances");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("select_bandwidth: rate must be in (0,1)");
    }
    const auto n = distances.size();
    auto k = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n);
    std::vector<double> work(distances.begin(), distances.end());
    std::nth_element(work.begin(), work.begin() + (k - 1), work.end());
    return work[k - 1];
}

PosteriorSample is_abc(const Model& model, const SummaryVector& s_obs, const Kernel& kernel,
                       const ProposalSpec& proposal, const BandwidthRule& rule,
                       std::size_t n_proposals, std::uint64_t seed, int workers) {
    if (n_proposals == 0) {
        throw std::invalid_argument("is_abc: need at least one proposal");
    }
    if (s_obs.size() != model.summary_dim() || kernel.lambda.size() != model.summary_dim()) {
        throw std::invalid_argument("is_abc: summary dimension mismatch");
    }

    const BoxPrior& prior = model.prior();
    struct Slot {
        ParameterVector theta;
        double weight = 0.0;
        double distance = std::numeric_limits<double>::infinity();
        bool valid = false;
    };
    std::vector<Slot> slots(n_proposals);
    std::size_t n_simulated = 0;

    parallel_for(n_proposals, workers, [&](std::size_t i) {
        RngStream rng = derive_stream(seed, 2 * i);
        Slot& slot = slots[i];
        slot.theta = proposal.sample(rng, prior);
        const double prior_density = prior.density(slot.theta);
        if (prior_density <= 0.0 || !model.in_domain(slot.theta)) {
            slot.weight = 0.0;
            return;
        }
        slot.weight = prior_density / proposal.density(slot.theta, prior);
        if (!std::isfinite(slot.weight)) {
            throw std::runtime_error("is_abc: non-finite importance weight");
        }
        const SummaryVector s = model.simulate_summary(slot.theta, rng);
        slot.distance = lambda_norm(kernel, s - s_obs);
        slot.valid = true;
    });
    for (const Slot& slot : slots) {
        if (slot.valid) ++n_simulated;
    }

    double eps = rule.value;
    if (rule.mode == BandwidthRule::Mode::acceptance_rate) {
        std::vector<double> distances(n_proposals);
        for (std::size_t i = 0; i < n_proposals; ++i) distances[i] = slots[i].distance;
        eps = select_bandwidth(distances, rule.value);
        if (!std::isfinite(eps)) {
            throw EmptyAcceptance("is_abc: bandwidth quantile fell on invalid proposals");
        }
    }

    PosteriorSample sample;
    sample.n_proposed = n_proposals;
    sample.n_simulated = n_simulated;
    sample.bandwidth = eps;
    sample.seed = seed;
    sample.kernel = kernel;

    // K_eps(s - s_obs) as a function of the recorded Lambda-distance.
    auto kernel_value = [&kernel](double distance, double bandwidth) {
        const double r = distance / bandwidth;
        switch (kernel.family) {
            case KernelFamily::uniform:
                return r <= 1.0 ? 1.0 : 0.0;
            case KernelFamily::gaussian:
                return std::exp(-0.5 * r * r);
            case KernelFamily::epanechnikov:
                return std::max(0.0, 1.0 - r * r);
        }
        return 0.0;
    };
    const bool uniform = kernel.family == KernelFamily::uniform;
    for (std::size_t i = 0; i < n_proposals; ++i) {
        const Slot& slot = slots[i];
        if (!slot.valid || slot.weight <= 0.0) continue;
        bool accept;
        if (uniform) {
            accept = slot.distance <= eps;
        } else {
            RngStream accept_rng = derive_stream(seed, 2 * i + 1);
            accept = accept_rng.uniform01() < kernel_value(slot.distance, eps);
        }
        if (accept) {
            sample.particles.push_back({slot.theta, slot.weight, slot.distance, true});
        }
    }

    if (sample.particles.empty()) {
        throw EmptyAcceptance("is_abc: no proposals accepted (bandwidth " +
                              std::to_string(eps) + ")");
    }
    return sample;
}

PosteriorSample rejection_abc(const Model& model, const SummaryVector& s_obs,
                              const Kernel& kernel, const BandwidthRule& rule,
                              std::size_t n_proposals, std::uint64_t seed, int workers) {
    return is_abc(model, s_obs, kernel, ProposalSpec::prior_only(), rule, n_proposals,
                  seed, workers);
}

Eigen::VectorXd pilot_lambda(const Model& model, std::size_t n_pilot, std::uint64_t seed,
                             int workers) {
    if (n_pilot < 2) {
        throw std::invalid_argument("pilot_lambda: need at least 2 pilot draws");
    }
    const int d = model.summary_dim();
    std::vector<SummaryVector> sims(n_pilot);
    std::vector<char> ok(n_pilot, 0);
    parallel_for(n_pilot, workers, [&](std::size_t i) {
        RngStream rng = derive_stream(seed, 2 * i);
        const ParameterVector theta = model.prior().sample(rng);
        if (!model.in_domain(theta)) return;
        sims[i] = model.simulate_summary(theta, rng);
        ok[i] = 1;
    });
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_pilot; ++i) {
        if (ok[i]) {
            mean += sims[i];
            ++count;
        }
    }
    if (count < 2) {
        throw std::runtime_error("pilot_lambda: too few valid pilot simulations");
    }
    mean /= static_cast<double>(count);
    Eigen::VectorXd var = Eigen::VectorXd::Zero(d);
    for (std::size_t i = 0; i < n_pilot; ++i) {
        if (ok[i]) var += (sims[i] - mean).cwiseAbs2();
    }
    var /= static_cast<double>(count);
    Eigen::VectorXd lambda(d);
    for (int j = 0; j < d; ++j) {
        lambda[j] = var[j] > 0.0 ? 1.0 / var[j] : 1.0;
    }
    return lambda;
}

} // namespace abc
