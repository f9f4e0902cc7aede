#include "qmat/defect.hpp"

#include <cmath>
#include <sstream>

namespace qmat::defect {

namespace {

// Largest variable count accepted for the dense rank computation.
constexpr std::size_t max_variables = 12000;

} // namespace

RestrictedDefectReport restricted_defect(const ComplexMatrix& u, const ToleranceConfig& tol)
{
    require_square(u, "restricted_defect");
    require_finite(u, "restricted_defect");
    const auto n = static_cast<std::size_t>(u.rows());
    const double scale = std::max(1.0, u.cwiseAbs().maxCoeff());
    const double htol = tol.rank_gap_tol * scale;
    require(frobenius(u - u.adjoint()) <= htol * static_cast<double>(n), ErrorKind::Contract,
            "restricted_defect: matrix is not Hermitian");
    const double c = u(0, 0).real();
    for (std::size_t j = 0; j < n; ++j) {
        require(std::abs(u(j, j) - c) <= htol, ErrorKind::Contract,
                "restricted_defect: diagonal is not constant");
    }
    const ComplexMatrix gram = u * u.adjoint();
    const double s = gram.diagonal().real().mean();
    require(s > 0.0 && gram_deviation(u, s) <= tol.rank_gap_tol * s * static_cast<double>(n),
            ErrorKind::Contract, "restricted_defect: matrix is not unitary up to scale");

    RestrictedDefectReport report;
    report.tau = n * (n - 1) / 2;
    report.f = n - 1;
    const double umax = u.cwiseAbs().maxCoeff();

    // Upper-triangle variables; columns of vanishing entries are identically zero and skipped.
    std::vector<long> column(n * n, -1);
    std::size_t live = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (std::abs(u(a, b)) < tol.rank_gap_tol * umax) {
                ++report.z;
            } else {
                column[a * n + b] = static_cast<long>(live++);
            }
        }
    }
    if (live > max_variables) {
        std::ostringstream os;
        os << "restricted_defect: " << live << " variables exceed the dense limit of "
           << max_variables;
        fail(ErrorKind::Capacity, os.str());
    }

    const std::size_t equations = 2 * report.tau;
    report.equations = equations;
    RealMatrix system = RealMatrix::Zero(equations, std::max<std::size_t>(live, 1));
    auto add = [&](std::size_t row, std::size_t a, std::size_t b, cplx coef) {
        double sign = 1.0;
        if (a > b) {
            std::swap(a, b);
            sign = -1.0;
        }
        const long col = column[a * n + b];
        if (col < 0) {
            return;
        }
        system(row, col) += sign * coef.real();
        system(row + 1, col) += sign * coef.imag();
    };
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            add(row, j, k, -2.0 * c * u(k, j));
            for (std::size_t l = 0; l < n; ++l) {
                if (l == j || l == k) {
                    continue;
                }
                const cplx coef = u(k, l) * u(l, j);
                add(row, k, l, coef);
                add(row, j, l, -coef);
            }
            row += 2;
        }
    }
    if (live > 0 && equations > 0) {
        report.singular_values = svd_values(system);
        report.r = rank_from_singulars(report.singular_values, tol.rank_gap_tol);
    }
    report.delta = static_cast<long>(report.tau) - static_cast<long>(report.f)
                   - static_cast<long>(report.z) - static_cast<long>(report.r);
    return report;
}

RestrictedDefectReport restricted_defect_of_set(const POVMSet& set, const ToleranceConfig& tol)
{
    const auto gram = gram_from_vectors(set);
    return restricted_defect(gram_to_hermitian_unitary(gram.G, set.size(), set.d), tol);
}

ConfidenceBound robustness_bound(std::size_t d, std::size_t n, double sigma1, double s)
{
    if (n <= 2 * d) {
        std::ostringstream os;
        os << "robustness_bound: N = " << n << " must exceed 2d = " << 2 * d;
        fail(ErrorKind::Contract, os.str());
    }
    require(s >= 0.0 && std::isfinite(s), ErrorKind::Contract, "robustness_bound: s must be >= 0");
    require(sigma1 > 0.0 && std::isfinite(sigma1), ErrorKind::Contract,
            "robustness_bound: sigma1 must be positive");
    const double dd = static_cast<double>(d);
    const double nn = static_cast<double>(n);
    const double shape = 1.0 - 2.0 * dd / nn;
    ConfidenceBound bound;
    bound.sigma1 = sigma1;
    bound.f_dN = (64.0 * dd * dd / nn) * shape * shape * std::sqrt((nn - dd) / (nn * (nn - 1.0)));
    bound.s_max = sigma1 / (2.0 * bound.f_dN);
    return bound;
}

} // namespace qmat::defect
