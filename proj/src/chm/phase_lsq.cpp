#include "phase_lsq.hpp"

#include <cmath>

namespace qmat::chm::detail {

PhaseFit solve_phases(const ResidualFn& residual, std::vector<double> phases,
                      std::size_t max_iters, double target)
{
    const auto n = phases.size();
    Eigen::VectorXd r = residual(phases);
    double cost = r.norm();
    double lambda = 1e-3;
    PhaseFit fit;
    std::size_t it = 0;
    for (; it < max_iters && cost > target; ++it) {
        Eigen::MatrixXd jac(r.size(), static_cast<Eigen::Index>(n));
        constexpr double h = 1e-6;
        for (std::size_t p = 0; p < n; ++p) {
            auto plus = phases;
            auto minus = phases;
            plus[p] += h;
            minus[p] -= h;
            jac.col(static_cast<Eigen::Index>(p)) = (residual(plus) - residual(minus)) / (2.0 * h);
        }
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd grad = jac.transpose() * r;
        bool improved = false;
        while (lambda < 1e12) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
            const Eigen::VectorXd step = damped.ldlt().solve(-grad);
            auto trial = phases;
            for (std::size_t p = 0; p < n; ++p) {
                trial[p] += step(static_cast<Eigen::Index>(p));
            }
            const Eigen::VectorXd rt = residual(trial);
            const double ct = rt.norm();
            if (std::isfinite(ct) && ct < cost) {
                phases = std::move(trial);
                r = rt;
                cost = ct;
                lambda = std::max(lambda / 3.0, 1e-12);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!improved) {
            break;
        }
    }
    fit.phases = std::move(phases);
    fit.residual = cost;
    fit.iterations = it;
    return fit;
}

} // namespace qmat::chm::detail
