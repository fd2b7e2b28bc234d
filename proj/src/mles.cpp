#include "abc/mles.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "abc/nelder_mead.hpp"
#include "abc/stats.hpp"

namespace abc {

double synthetic_loglik(const SummaryLimit& limit, const SummaryVector& s_obs,
                        std::size_t n, const ParameterVector& theta, bool include_logdet) {
    const SummaryVector resid = s_obs - limit.s(theta);
    const Eigen::MatrixXd a = limit.A(theta);
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("synthetic_loglik: A(theta) not positive definite");
    }
    const double rate = limit.a_n(n);
    const double quad = rate * rate * resid.dot(llt.solve(resid));
    double loglik = -0.5 * quad;
    if (include_logdet) {
        double logdet = 0.0;
        const auto& L = llt.matrixLLT();
        for (int i = 0; i < a.rows(); ++i) logdet += std::log(L(i, i));
        // log|A/a_n^2| = 2 sum log L_ii - 2 d log a_n; the constant in theta
        // -2 d log a_n is kept so the value matches the density up to 2*pi.
        loglik -= logdet - static_cast<double>(a.rows()) * std::log(rate);
    }
    return loglik;
}

ParameterVector mles(const SummaryLimit& limit, const SummaryVector& s_obs, std::size_t n,
                     const ParameterVector& theta_init, const BoxPrior& box,
                     const MlesOptions& opts, RngStream& rng) {
    if (!box.contains(theta_init)) {
        throw std::invalid_argument("mles: theta_init outside the prior box");
    }
    auto objective = [&](const Eigen::VectorXd& theta) {
        try {
            return -synthetic_loglik(limit, s_obs, n, theta, opts.include_logdet);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    NelderMeadOptions nm;
    nm.max_iters = opts.max_iters;
    nm.tol = opts.tol;

    bool any_converged = false;
    NelderMeadResult best;
    best.f = std::numeric_limits<double>::infinity();
    for (int start = 0; start <= opts.restarts; ++start) {
        const ParameterVector x0 = start == 0 ? theta_init : box.sample(rng);
        const NelderMeadResult res = nelder_mead(objective, x0, box.lower(), box.upper(), nm);
        any_converged = any_converged || res.converged;
        if (res.f < best.f) best = res;
    }
    if (!any_converged) {
        throw MlesNonConvergence("mles: no start converged within budget", best.x);
    }
    return best.x;
}

ParameterVector mle_gaussian(std::span<const double> data) {
    if (data.size() < 2) {
        throw std::invalid_argument("mle_gaussian: need at least 2 observations");
    }
    ParameterVector theta(2);
    theta[0] = mean(data);
    theta[1] = std::sqrt(variance(data));
    return theta;
}

} // namespace abc
