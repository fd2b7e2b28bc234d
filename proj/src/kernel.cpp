#include "abc/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace abc {

Kernel Kernel::identity(KernelFamily family, int dim) {
    Kernel k;
    k.family = family;
    k.lambda = Eigen::VectorXd::Ones(dim);
    return k;
}

double lambda_norm(const Kernel& k, const SummaryVector& v) {
    if (v.size() != k.lambda.size()) {
        throw std::invalid_argument("lambda_norm: dimension mismatch");
    }
    return std::sqrt(v.cwiseProduct(k.lambda).dot(v));
}

double kernel_eval(const Kernel& k, const SummaryVector& v) {
    const double r = lambda_norm(k, v);
    switch (k.family) {
        case KernelFamily::uniform:
            return r <= 1.0 ? 1.0 : 0.0;
        case KernelFamily::gaussian:
            return std::exp(-0.5 * r * r);
        case KernelFamily::epanechnikov:
            return std::max(0.0, 1.0 - r * r);
    }
    throw std::logic_error("kernel_eval: unknown family");
}

double scaled_kernel_eval(const Kernel& k, double eps, const SummaryVector& x) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("scaled_kernel_eval: eps must be positive");
    }
    return kernel_eval(k, x / eps);
}

} // namespace abc
