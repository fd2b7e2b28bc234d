#include "abc/box_prior.hpp"

#include <stdexcept>

namespace abc {

BoxPrior::BoxPrior(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size() || lower_.size() == 0) {
        throw std::invalid_argument("BoxPrior: bound dimensions must match and be nonempty");
    }
    double vol = 1.0;
    for (int i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("BoxPrior: lower must be < upper per coordinate");
        }
        vol *= upper_[i] - lower_[i];
    }
    inv_volume_ = 1.0 / vol;
}

bool BoxPrior::contains(const ParameterVector& theta) const {
    if (theta.size() != lower_.size()) return false;
    for (int i = 0; i < theta.size(); ++i) {
        if (theta[i] < lower_[i] || theta[i] > upper_[i]) return false;
    }
    return true;
}

double BoxPrior::density(const ParameterVector& theta) const {
    return contains(theta) ? inv_volume_ : 0.0;
}

ParameterVector BoxPrior::sample(RngStream& rng) const {
    ParameterVector theta(lower_.size());
    for (int i = 0; i < lower_.size(); ++i) {
        theta[i] = rng.uniform(lower_[i], upper_[i]);
    }
    return theta;
}

Eigen::VectorXd BoxPrior::variance() const {
    return (upper_ - lower_).array().square() / 12.0;
}

} // namespace abc
