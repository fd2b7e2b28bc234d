#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "abc/gaussian_model.hpp"
#include "abc/summary_limit.hpp"

namespace abc {
namespace {

double standard_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

void check_sigma(const ParameterVector& theta) {
    if (theta.size() != 2 || !(theta[1] > 0.0)) {
        throw std::domain_error("gaussian_limit: sigma must be positive");
    }
}

} // namespace

SummaryLimit gaussian_limit(std::vector<double> alphas) {
    const int d = static_cast<int>(alphas.size());
    if (d == 0) {
        throw std::invalid_argument("gaussian_limit: need at least one alpha");
    }
    auto z = std::make_shared<Eigen::VectorXd>(d);
    auto pdf = std::make_shared<Eigen::VectorXd>(d);
    auto as = std::make_shared<std::vector<double>>(std::move(alphas));
    for (int j = 0; j < d; ++j) {
        (*z)[j] = standard_normal_quantile((*as)[static_cast<std::size_t>(j)]);
        (*pdf)[j] = standard_normal_pdf((*z)[j]);
    }

    SummaryLimit limit;
    limit.d = d;
    limit.p = 2;
    limit.s = [z, d](const ParameterVector& theta) {
        check_sigma(theta);
        SummaryVector s(d);
        for (int j = 0; j < d; ++j) {
            s[j] = std::exp(0.5 * (theta[0] + theta[1] * (*z)[j]));
        }
        return s;
    };
    limit.Ds = [z, d](const ParameterVector& theta) {
        check_sigma(theta);
        Eigen::MatrixXd ds(d, 2);
        for (int j = 0; j < d; ++j) {
            const double sj = std::exp(0.5 * (theta[0] + theta[1] * (*z)[j]));
            ds(j, 0) = 0.5 * sj;
            ds(j, 1) = 0.5 * (*z)[j] * sj;
        }
        return ds;
    };
    limit.A = [z, pdf, as, d](const ParameterVector& theta) {
        check_sigma(theta);
        const double sigma2 = theta[1] * theta[1];
        Eigen::VectorXd s(d);
        for (int j = 0; j < d; ++j) {
            s[j] = std::exp(0.5 * (theta[0] + theta[1] * (*z)[j]));
        }
        Eigen::MatrixXd a(d, d);
        for (int j = 0; j < d; ++j) {
            for (int k = j; k < d; ++k) {
                const double cov = sigma2 * (*as)[static_cast<std::size_t>(j)] *
                                   (1.0 - (*as)[static_cast<std::size_t>(k)]) /
                                   ((*pdf)[j] * (*pdf)[k]);
                a(j, k) = a(k, j) = 0.25 * s[j] * s[k] * cov;
            }
        }
        return a;
    };
    return limit;
}

} // namespace abc
