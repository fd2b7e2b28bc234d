#include "abc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace abc {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper,
                             const NelderMeadOptions& opts) {
    const int p = static_cast<int>(x0.size());
    if (lower.size() != p || upper.size() != p) {
        throw std::invalid_argument("nelder_mead: bound dimensions must match x0");
    }
    auto clamp = [&](Eigen::VectorXd x) {
        for (int i = 0; i < p; ++i) {
            x[i] = std::clamp(x[i], lower[i], upper[i]);
        }
        return x;
    };

    // Initial simplex: x0 plus one perturbed vertex per coordinate.
    std::vector<Eigen::VectorXd> xs(static_cast<std::size_t>(p) + 1);
    std::vector<double> fs(xs.size());
    xs[0] = clamp(x0);
    for (int i = 0; i < p; ++i) {
        Eigen::VectorXd v = xs[0];
        const double step = opts.initial_step * (upper[i] - lower[i]);
        v[i] += (v[i] + step <= upper[i]) ? step : -step;
        xs[static_cast<std::size_t>(i) + 1] = clamp(v);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

    constexpr double alpha = 1.0; // reflection
    constexpr double gamma = 2.0; // expansion
    constexpr double rho = 0.5;   // contraction
    constexpr double sigma = 0.5; // shrink

    std::vector<std::size_t> order(xs.size());
    NelderMeadResult result;
    int iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];

        double size = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            size = std::max(size, (xs[i] - xs[best]).cwiseAbs().maxCoeff());
        }
        if (std::abs(fs[worst] - fs[best]) <= opts.tol * (1.0 + std::abs(fs[best])) &&
            size <= opts.tol) {
            result.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(p);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i != worst) centroid += xs[i];
        }
        centroid /= static_cast<double>(p);

        const Eigen::VectorXd reflected = clamp(centroid + alpha * (centroid - xs[worst]));
        const double f_reflected = f(reflected);
        if (f_reflected < fs[best]) {
            const Eigen::VectorXd expanded = clamp(centroid + gamma * (reflected - centroid));
            const double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                xs[worst] = expanded;
                fs[worst] = f_expanded;
            } else {
                xs[worst] = reflected;
                fs[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fs[second_worst]) {
            xs[worst] = reflected;
            fs[worst] = f_reflected;
            continue;
        }
        const Eigen::VectorXd contracted = clamp(centroid + rho * (xs[worst] - centroid));
        const double f_contracted = f(contracted);
        if (f_contracted < fs[worst]) {
            xs[worst] = contracted;
            fs[worst] = f_contracted;
            continue;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i == best) continue;
            xs[i] = clamp(xs[best] + sigma * (xs[i] - xs[best]));
            fs[i] = f(xs[i]);
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(fs.begin(), fs.end()) - fs.begin());
    result.x = xs[best];
    result.f = fs[best];
    result.iterations = iter;
    return result;
}

} // namespace abc
