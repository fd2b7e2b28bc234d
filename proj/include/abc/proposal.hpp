#pragma once

#include <optional>

#include <Eigen/Cholesky>

#include "abc/box_prior.hpp"
#include "abc/rng.hpp"
#include "abc/types.hpp"

namespace abc {

/// Multivariate Student-t with location mu, scale matrix S (positive
/// definite) and df degrees of freedom. For df > 2 the variance is
/// S * df/(df-2).
class StudentT {
public:
    StudentT(Eigen::VectorXd mu, Eigen::MatrixXd scale, double df);

    /// Member of the family with the requested variance matrix: for df > 2
    /// the scale is variance * (df-2)/df; for df <= 2 (no finite variance)
    /// the scale is the variance matrix itself.
    static StudentT from_variance(Eigen::VectorXd mu, const Eigen::MatrixXd& variance,
                                  double df);

    int dim() const { return static_cast<int>(mu_.size()); }
    const Eigen::VectorXd& mu() const { return mu_; }
    const Eigen::MatrixXd& scale() const { return scale_; }
    double df() const { return df_; }
    /// Variance matrix (throws std::logic_error for df <= 2).
    Eigen::MatrixXd variance() const;

    double density(const ParameterVector& x) const;
    double log_density(const ParameterVector& x) const;
    ParameterVector sample(RngStream& rng) const;

private:
    Eigen::VectorXd mu_;
    Eigen::MatrixXd scale_;
    double df_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    double log_norm_ = 0.0; // log of the density normalising constant
};

/// Sampler proposal: the mixture q(theta) = beta * prior + (1 - beta) * t.
/// beta = 1 (or no t component) proposes from the prior alone and draws the
/// exact same stream sequence as the rejection sampler; beta = 0 proposes
/// from the t alone. On the prior support with beta > 0 the importance
/// weight prior/q is bounded by 1/beta.
struct ProposalSpec {
    double beta = 1.0;
    std::optional<StudentT> t;

    static ProposalSpec prior_only() { return {}; }
    static ProposalSpec mixture(double beta, StudentT t);
    static ProposalSpec t_only(StudentT t);

    bool is_prior_only() const { return !t.has_value() || beta >= 1.0; }

    double density(const ParameterVector& theta, const BoxPrior& prior) const;
    ParameterVector sample(RngStream& rng, const BoxPrior& prior) const;
};

} // namespace abc
