#include "qmat/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qmat::bell {

namespace {

double pencil_top(const ComplexMatrix& m, double theta)
{
    const cplx phase = std::polar(1.0, theta);
    const Eigen::MatrixXcd h = 0.5 * (phase * m + std::conj(phase) * m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

} // namespace

double numerical_radius(const ComplexMatrix& m)
{
    require_square(m, "numerical_radius");
    require_finite(m, "numerical_radius");
    constexpr int grid = 360;
    const double step = 2.0 * std::numbers::pi / grid;
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double value = pencil_top(m, i * step);
        if (value > best) {
            best = value;
            best_theta = i * step;
        }
    }
    // Golden-section refinement inside the bracket around the best grid point.
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_theta - step;
    double hi = best_theta + step;
    double a = hi - ratio * (hi - lo);
    double b = lo + ratio * (hi - lo);
    double fa = pencil_top(m, a);
    double fb = pencil_top(m, b);
    while (hi - lo > 1e-10) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = pencil_top(m, b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = pencil_top(m, a);
        }
    }
    return std::max({best, fa, fb});
}

BoundReport bounds(const ComplexMatrix& m)
{
    require_square(m, "bounds");
    const double n = static_cast<double>(m.rows());
    BoundReport report;
    report.numerical_radius = numerical_radius(m);
    report.sigma_max = svd_values(m).front();
    report.nu = m.rowwise().sum().norm();
    report.c_radius = n * report.numerical_radius;
    report.q_singular = n * report.sigma_max;
    report.c_taxicab = std::sqrt(n) * report.nu;
    return report;
}

} // namespace qmat::bell
