#include "abc/proposal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abc {

StudentT::StudentT(Eigen::VectorXd mu, Eigen::MatrixXd scale, double df)
    : mu_(std::move(mu)), scale_(std::move(scale)), df_(df) {
    if (!(df_ > 0.0)) {
        throw std::invalid_argument("StudentT: df must be positive");
    }
    if (scale_.rows() != mu_.size() || scale_.cols() != mu_.size()) {
        throw std::invalid_argument("StudentT: scale dimensions must match mu");
    }
    llt_ = Eigen::LLT<Eigen::MatrixXd>(scale_);
    if (llt_.info() != Eigen::Success) {
        throw std::invalid_argument("StudentT: scale must be positive definite");
    }
    const double p = static_cast<double>(dim());
    double log_det_half = 0.0;
    for (int i = 0; i < scale_.rows(); ++i) {
        log_det_half += std::log(llt_.matrixLLT()(i, i));
    }
    log_norm_ = std::lgamma(0.5 * (df_ + p)) - std::lgamma(0.5 * df_) -
                0.5 * p * std::log(df_ * std::numbers::pi) - log_det_half;
}

StudentT StudentT::from_variance(Eigen::VectorXd mu, const Eigen::MatrixXd& variance,
                                 double df) {
    const double factor = df > 2.0 ? (df - 2.0) / df : 1.0;
    return StudentT(std::move(mu), factor * variance, df);
}

Eigen::MatrixXd StudentT::variance() const {
    if (!(df_ > 2.0)) {
        throw std::logic_error("StudentT::variance: undefined for df <= 2");
    }
    return scale_ * (df_ / (df_ - 2.0));
}

double StudentT::log_density(const ParameterVector& x) const {
    if (x.size() != mu_.size()) {
        throw std::invalid_argument("StudentT::log_density: dimension mismatch");
    }
    const Eigen::VectorXd diff = x - mu_;
    const double maha = diff.dot(llt_.solve(diff));
    const double p = static_cast<double>(dim());
    return log_norm_ - 0.5 * (df_ + p) * std::log1p(maha / df_);
}

double StudentT::density(const ParameterVector& x) const {
    return std::exp(log_density(x));
}

ParameterVector StudentT::sample(RngStream& rng) const {
    Eigen::VectorXd z(mu_.size());
    for (int i = 0; i < z.size(); ++i) z[i] = rng.normal();
    const double u = rng.chi_squared(df_);
    return mu_ + (llt_.matrixL() * z) / std::sqrt(u / df_);
}

ProposalSpec ProposalSpec::mixture(double beta, StudentT t) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("ProposalSpec::mixture: beta must be in (0,1)");
    }
    ProposalSpec spec;
    spec.beta = beta;
    spec.t = std::move(t);
    return spec;
}

ProposalSpec ProposalSpec::t_only(StudentT t) {
    ProposalSpec spec;
    spec.beta = 0.0;
    spec.t = std::move(t);
    return spec;
}

double ProposalSpec::density(const ParameterVector& theta, const BoxPrior& prior) const {
    if (is_prior_only()) {
        return prior.density(theta);
    }
    if (beta == 0.0) {
        return t->density(theta);
    }
    return beta * prior.density(theta) + (1.0 - beta) * t->density(theta);
}

ParameterVector ProposalSpec::sample(RngStream& rng, const BoxPrior& prior) const {
    if (is_prior_only()) {
        return prior.sample(rng);
    }
    if (beta == 0.0) {
        return t->sample(rng);
    }
    return rng.uniform01() < beta ? prior.sample(rng) : t->sample(rng);
}

} // namespace abc
