#pragma once

#include <cstddef>

#include "abc/box_prior.hpp"
#include "abc/rng.hpp"
#include "abc/types.hpp"

namespace abc {

/// Simulator contract shared by all samplers: a prior over parameters and a
/// map theta -> summary statistic of one synthetic dataset of size n.
///
/// Models are immutable after construction; simulate_summary is pure given
/// (theta, rng) and safe to call concurrently.
class Model {
public:
    virtual ~Model() = default;

    virtual int param_dim() const = 0;
    virtual int summary_dim() const = 0;
    virtual std::size_t data_size() const = 0;
    virtual const BoxPrior& prior() const = 0;

    /// True when the simulator is defined at theta. The prior box may cover
    /// invalid regions (e.g. sigma <= 0); samplers treat such draws as having
    /// zero likelihood: they are never simulated and never accepted.
    virtual bool in_domain(const ParameterVector& /*theta*/) const { return true; }

    /// Simulates one dataset of size data_size() and returns its summary.
    /// Throws std::domain_error when !in_domain(theta).
    virtual SummaryVector simulate_summary(const ParameterVector& theta,
                                           RngStream& rng) const = 0;
};

} // namespace abc
