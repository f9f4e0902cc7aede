#include "qmat/chm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qmat::chm {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double fold_phase(double phi)
{
    double f = std::fmod(phi, two_pi);
    if (f < 0.0) {
        f += two_pi;
    }
    return f >= two_pi ? 0.0 : f;
}

bool is_unimodular(const ComplexMatrix& m, double tol)
{
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (std::abs(std::abs(m.data()[i]) - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_chm(const ComplexMatrix& m, const ToleranceConfig& tol)
{
    require_square(m, "is_chm");
    if (!is_finite(m) || !is_unimodular(m, tol.phase_cluster_tol)) {
        return false;
    }
    return deviation(m) <= tol.unitarity_tol * static_cast<double>(m.rows());
}

HaagerupCard haagerup_card(const ComplexMatrix& h, const ToleranceConfig& tol)
{
    require_square(h, "haagerup_card");
    require(is_chm(h, tol), ErrorKind::Contract, "haagerup_card: input is not a complex Hadamard matrix");
    const auto n = static_cast<std::size_t>(h.rows());
    std::vector<double> phases;
    phases.reserve(n * n * n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx left = h(j, k) * std::conj(h(l, k));
                for (std::size_t m = 0; m < n; ++m) {
                    const cplx q = left * h(l, m) * std::conj(h(j, m));
                    phases.push_back(fold_phase(std::arg(q)));
                }
            }
        }
    }
    std::sort(phases.begin(), phases.end());
    std::size_t clusters = 1;
    for (std::size_t i = 1; i < phases.size(); ++i) {
        if (phases[i] - phases[i - 1] > tol.phase_cluster_tol) {
            ++clusters;
        }
    }
    // Phases just below 2 pi belong to the cluster around zero.
    if (clusters > 1 && phases.front() + two_pi - phases.back() <= tol.phase_cluster_tol) {
        --clusters;
    }
    return {clusters, tol.phase_cluster_tol};
}

ButsonReport butson_fit(const ComplexMatrix& h, int q_max, const ToleranceConfig& tol)
{
    ButsonReport report;
    if (h.size() == 0 || q_max < 1 || !is_finite(h) || !is_unimodular(h, tol.phase_cluster_tol)) {
        report.max_phase_residual = std::numeric_limits<double>::infinity();
        return report;
    }
    std::vector<double> turns;
    turns.reserve(static_cast<std::size_t>(h.size()));
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        turns.push_back(fold_phase(std::arg(h.data()[i])) / two_pi);
    }
    double residual = 0.0;
    for (int q = 1; q <= q_max; ++q) {
        residual = 0.0;
        for (double t : turns) {
            const double x = t * q;
            residual = std::max(residual, std::abs(x - std::round(x)));
            if (residual >= tol.phase_cluster_tol) {
                break;
            }
        }
        if (residual < tol.phase_cluster_tol) {
            report.is_butson = true;
            report.q = q;
            report.max_phase_residual = residual;
            return report;
        }
    }
    report.max_phase_residual = residual;
    return report;
}

UnitaryDefectReport unitary_defect(const ComplexMatrix& u_in, const ToleranceConfig& tol)
{
    require_square(u_in, "unitary_defect");
    require_finite(u_in, "unitary_defect");
    const auto n = static_cast<std::size_t>(u_in.rows());
    ComplexMatrix u = u_in;
    if (is_chm(u_in, tol)) {
        u /= std::sqrt(static_cast<double>(n));
    }
    require(gram_deviation(u) <= tol.unitarity_tol * static_cast<double>(n), ErrorKind::Contract,
            "unitary_defect: input is not unitary");

    const std::size_t pairs = n * (n - 1) / 2;
    RealMatrix system = RealMatrix::Zero(2 * pairs, n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
                const cplx w = u(j, l) * std::conj(u(k, l));
                system(row, j * n + l) += w.real();
                system(row, k * n + l) -= w.real();
                system(row + 1, j * n + l) += w.imag();
                system(row + 1, k * n + l) -= w.imag();
            }
            row += 2;
        }
    }

    UnitaryDefectReport report;
    report.equations = system.rows();
    report.variables = system.cols();
    if (system.rows() > 0) {
        report.singular_values = svd_values(system);
    }
    report.rank = report.singular_values.empty()
                      ? 0
                      : rank_from_singulars(report.singular_values, tol.rank_gap_tol);
    report.solution_dim = report.variables - report.rank;
    const long trivial = 2 * static_cast<long>(n) - 1;
    report.defect = static_cast<int>(std::max(0L, static_cast<long>(report.solution_dim) - trivial));
    return report;
}

} // namespace qmat::chm
