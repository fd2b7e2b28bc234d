#pragma once

#include "abc/types.hpp"

namespace abc {

enum class KernelFamily { uniform, gaussian, epanechnikov };

/// Smoothing kernel K with max value 1, radially non-increasing in the
/// Lambda-norm ||v||_L = sqrt(v' diag(lambda) v). `lambda` holds the
/// diagonal of the scaling matrix; all entries must be positive.
struct Kernel {
    KernelFamily family = KernelFamily::uniform;
    Eigen::VectorXd lambda;

    static Kernel identity(KernelFamily family, int dim);
};

/// sqrt(v' diag(lambda) v). Throws std::invalid_argument on dimension mismatch.
double lambda_norm(const Kernel& k, const SummaryVector& v);

/// K(v) in [0,1]. uniform: 1{||v||_L <= 1}; gaussian: exp(-||v||_L^2 / 2);
/// epanechnikov: max(0, 1 - ||v||_L^2). All satisfy K(0) = 1.
double kernel_eval(const Kernel& k, const SummaryVector& v);

/// K_eps(x) = K(x / eps). Throws std::invalid_argument if eps <= 0.
double scaled_kernel_eval(const Kernel& k, double eps, const SummaryVector& x);

} // namespace abc
