#pragma once

#include "abc/rng.hpp"
#include "abc/types.hpp"

namespace abc {

/// Box-uniform prior: independent U(lower_i, upper_i) per coordinate.
/// Density is the constant 1/volume inside the box and 0 outside.
class BoxPrior {
public:
    BoxPrior() = default;
    BoxPrior(Eigen::VectorXd lower, Eigen::VectorXd upper);

    int dim() const { return static_cast<int>(lower_.size()); }
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }

    bool contains(const ParameterVector& theta) const;
    double density(const ParameterVector& theta) const;
    ParameterVector sample(RngStream& rng) const;

    Eigen::VectorXd mean() const { return 0.5 * (lower_ + upper_); }
    /// Per-coordinate variance (upper-lower)^2 / 12.
    Eigen::VectorXd variance() const;

private:
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
    double inv_volume_ = 0.0;
};

} // namespace abc
