#include "qmat/bell.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qmat::bell {

RealMatrix circulant_real(const std::vector<double>& first_row)
{
    const auto n = first_row.size();
    require(n >= 1, ErrorKind::Dimension, "circulant_real: empty first row");
    RealMatrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            c(j, k) = first_row[(k + n - j) % n];
        }
    }
    return c;
}

RealMatrix circulant_bell(std::size_t n)
{
    require(n >= 3, ErrorKind::Dimension, "circulant_bell: n must be at least 3");
    std::vector<double> row(n, 1.0);
    for (std::size_t j = 0; j < n / 2; ++j) {
        row[j] = -1.0;
    }
    return circulant_real(row);
}

double circulant_quantum_value(std::size_t n)
{
    const RealMatrix m = circulant_bell(n);
    return static_cast<double>(n) * svd_values(m).front();
}

double classical_sequence(std::size_t n)
{
    require(n >= 3, ErrorKind::Dimension, "classical_sequence: n must be at least 3");
    auto a = [](double k) { return 2.0 * k * (k + 1.0) + 1.0; };
    if (n % 2 == 1) {
        return a(static_cast<double>((n - 1) / 2));
    }
    if (n % 4 == 0) {
        const double k = static_cast<double>(n / 4);
        return 8.0 * k * k;
    }
    return 4.0 * a(static_cast<double>((n - 2) / 4));
}

std::pair<std::vector<double>, std::vector<double>> circulant_optimal_phases(std::size_t n)
{
    require(n >= 3, ErrorKind::Dimension, "circulant_optimal_phases: n must be at least 3");
    std::vector<double> alpha(n), beta(n);
    for (std::size_t j = 0; j < n; ++j) {
        alpha[j] = static_cast<double>(j);
    }
    const std::size_t r = n % 4;
    if (r == 3 || r == 0) {
        // Half-integer phases 2 beta_j = (2k + 3 + 2j) mod 2n.
        const std::size_t k = r == 3 ? (n - 3) / 4 : (n - 4) / 4;
        for (std::size_t j = 0; j < n; ++j) {
            beta[j] = static_cast<double>((2 * k + 3 + 2 * j) % (2 * n)) / 2.0;
        }
    } else {
        const std::size_t k = r == 1 ? (n - 5) / 4 : (n - 6) / 4;
        for (std::size_t j = 0; j < n; ++j) {
            beta[j] = static_cast<double>((2 + k + j) % n);
        }
    }
    return {alpha, beta};
}

ComplexMatrix qubit_observable(double phi, std::size_t n)
{
    const double t = 2.0 * std::numbers::pi * phi / static_cast<double>(n);
    ComplexMatrix x(2, 2);
    x << std::cos(t), -std::sin(t), -std::sin(t), -std::cos(t);
    return x;
}

QubitBellReport qubit_bell_operator(const RealMatrix& core, const std::vector<double>& alpha,
                                    const std::vector<double>& beta)
{
    require(core.rows() == core.cols() && core.rows() > 0, ErrorKind::Dimension,
            "qubit_bell_operator: core must be square");
    const auto n = static_cast<std::size_t>(core.rows());
    require(alpha.size() == n && beta.size() == n, ErrorKind::Dimension,
            "qubit_bell_operator: need one phase per setting");
    QubitBellReport report;
    report.op = ComplexMatrix::Zero(4, 4);
    double c = 0.0;
    const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ComplexMatrix a = qubit_observable(alpha[j], n);
        for (std::size_t k = 0; k < n; ++k) {
            if (core(j, k) == 0.0) {
                continue;
            }
            const ComplexMatrix b = qubit_observable(beta[k], n);
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    report.op.block(2 * r, 2 * s, 2, 2) += core(j, k) * a(r, s) * b;
                }
            }
            c += core(j, k) * std::cos(w * alpha[j]) * std::cos(w * beta[k]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(report.op),
                                                           Eigen::EigenvaluesOnly);
    report.max_eigenvalue = solver.eigenvalues().maxCoeff();
    ComplexMatrix tmpl(4, 4);
    tmpl << c, 0, 0, c,
            0, -c, c, 0,
            0, c, -c, 0,
            c, 0, 0, c;
    if (frobenius(report.op - tmpl) <= 1e-10 * std::max(1.0, frobenius(report.op))) {
        report.c = c;
    }
    return report;
}

} // namespace qmat::bell
