#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qmat::chm::detail {

using ResidualFn = std::function<Eigen::VectorXd(const std::vector<double>&)>;

struct PhaseFit {
    std::vector<double> phases;
    double residual = 0.0;
    std::size_t iterations = 0;
};

// Levenberg-Marquardt over real phase parameters with a central-difference Jacobian.
// Unimodularity is built in since every unknown enters as exp(i phi).
PhaseFit solve_phases(const ResidualFn& residual, std::vector<double> phases,
                      std::size_t max_iters, double target);

} // namespace qmat::chm::detail
