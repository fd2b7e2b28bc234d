#pragma once

#include <functional>

#include <Eigen/Core>

namespace abc {

struct NelderMeadOptions {
    int max_iters = 500;
    double tol = 1e-8;        // stop when simplex f-spread and size fall below
    double initial_step = 0.05; // relative to box width per coordinate
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double f = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free simplex minimisation with box constraints enforced by
/// clamping every trial vertex into [lower, upper].
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper,
                             const NelderMeadOptions& opts = {});

} // namespace abc
