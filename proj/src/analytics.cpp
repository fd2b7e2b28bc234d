#include <stdexcept>

#include <Eigen/Cholesky>

#include "abc/summary_limit.hpp"

namespace abc {
namespace {

Eigen::LLT<Eigen::MatrixXd> cholesky_or_throw(const Eigen::MatrixXd& a, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error(std::string(what) + ": matrix not positive definite");
    }
    return llt;
}

} // namespace

Eigen::MatrixXd fisher_info_summary(const SummaryLimit& limit, const ParameterVector& theta) {
    const Eigen::MatrixXd ds = limit.Ds(theta);
    const Eigen::MatrixXd a = limit.A(theta);
    const auto llt = cholesky_or_throw(a, "fisher_info_summary");
    const Eigen::MatrixXd info = ds.transpose() * llt.solve(ds);
    return 0.5 * (info + info.transpose());
}

Eigen::MatrixXd reduction_matrix(const SummaryLimit& limit, const ParameterVector& theta0) {
    if (limit.d < limit.p) {
        throw std::invalid_argument("reduction_matrix: requires d >= p");
    }
    const Eigen::MatrixXd ds = limit.Ds(theta0);
    const Eigen::MatrixXd a = limit.A(theta0);
    const auto llt = cholesky_or_throw(a, "reduction_matrix");
    // C = Ds' A^{-1}, computed as (A^{-1} Ds)'.
    return llt.solve(ds).transpose();
}

SummaryVector reduce_summary(const Eigen::MatrixXd& C, const SummaryVector& s) {
    if (C.cols() != s.size()) {
        throw std::invalid_argument("reduce_summary: dimension mismatch");
    }
    return C * s;
}

double asymptotic_variance(const SummaryLimit& limit, const ParameterVector& theta0,
                           const Eigen::VectorXd& dh, std::size_t n) {
    const Eigen::MatrixXd info = fisher_info_summary(limit, theta0);
    const auto llt = cholesky_or_throw(info, "asymptotic_variance");
    const double rate = limit.a_n(n);
    return dh.dot(llt.solve(dh)) / (rate * rate);
}

} // namespace abc
