#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace abc {

/// Point in parameter space, length p.
using ParameterVector = Eigen::VectorXd;

/// Summary statistic, length d.
using SummaryVector = Eigen::VectorXd;

/// One proposed parameter and its sampler bookkeeping. `weight` is the
/// prior/proposal ratio from the importance sampler; `distance` is the
/// Lambda-norm distance between simulated and observed summaries.
struct WeightedParticle {
    ParameterVector theta;
    double weight = 1.0;
    double distance = 0.0;
    bool accepted = false;
};

} // namespace abc
