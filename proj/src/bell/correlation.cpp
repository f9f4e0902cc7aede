#include "qmat/bell.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qmat::bell {

namespace {

cplx root(std::size_t power, std::size_t q)
{
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(power % q)
                               / static_cast<double>(q));
}

// Largest enumeration accepted by the q-equivalence search.
constexpr double max_assignments = 16777216.0;

} // namespace

void BellScenario::validate() const
{
    require(q >= 2 && m >= 2, ErrorKind::Contract, "BellScenario: need q >= 2 and m >= 2");
}

CorrelationMatrix CorrelationMatrix::make(BellScenario scenario, ComplexMatrix m, double tol)
{
    scenario.validate();
    require(static_cast<std::size_t>(m.rows()) == scenario.order() && m.rows() == m.cols(),
            ErrorKind::Dimension, "CorrelationMatrix: order must equal q*m");
    require_finite(m, "CorrelationMatrix");
    CorrelationMatrix c{scenario, std::move(m)};
    const double scale = std::max(1.0, c.M.cwiseAbs().maxCoeff());
    require(c.symmetry_residual() <= tol * scale, ErrorKind::Contract,
            "CorrelationMatrix: conjugation symmetry violated");
    return c;
}

ComplexMatrix CorrelationMatrix::core() const
{
    const auto n = static_cast<Eigen::Index>((scenario.q - 1) * scenario.m);
    const auto skip = static_cast<Eigen::Index>(scenario.m);
    return M.block(skip, skip, n, n);
}

double CorrelationMatrix::symmetry_residual() const
{
    const std::size_t q = scenario.q;
    const std::size_t m = scenario.m;
    double worst = 0.0;
    for (std::size_t s = 0; s < q; ++s) {
        for (std::size_t t = 0; t < q; ++t) {
            for (std::size_t x = 0; x < m; ++x) {
                for (std::size_t y = 0; y < m; ++y) {
                    const cplx a = M(m * ((q - s) % q) + x, m * ((q - t) % q) + y);
                    const cplx b = M(m * s + x, m * t + y);
                    worst = std::max(worst, std::abs(a - std::conj(b)));
                }
            }
        }
    }
    return worst;
}

CorrelationMatrix correlation_matrix(const std::vector<double>& s, BellScenario scenario)
{
    scenario.validate();
    const std::size_t q = scenario.q;
    const std::size_t m = scenario.m;
    if (s.size() != q * q * m * m) {
        std::ostringstream os;
        os << "correlation_matrix: expected " << q * q * m * m << " coefficients, got " << s.size();
        fail(ErrorKind::Dimension, os.str());
    }
    for (double v : s) {
        require(std::isfinite(v), ErrorKind::Input, "correlation_matrix: non-finite coefficient");
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    ComplexMatrix out = ComplexMatrix::Zero(q * m, q * m);
    for (std::size_t st = 0; st < q * q; ++st) {
        const std::size_t si = st / q;
        const std::size_t ti = st % q;
        for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = 0; y < m; ++y) {
                cplx acc = 0.0;
                for (std::size_t a = 0; a < q; ++a) {
                    for (std::size_t b = 0; b < q; ++b) {
                        acc += root(si * a + ti * b, q) * s[((a * q + b) * m + x) * m + y];
                    }
                }
                out(m * si + x, m * ti + y) = norm * acc;
            }
        }
    }
    return {scenario, out};
}

double excess(const ComplexMatrix& m)
{
    const cplx sum = m.sum();
    require(std::abs(sum.imag()) <= 1e-10 * std::max(1.0, std::abs(sum)), ErrorKind::Contract,
            "excess: entry sum is not real");
    return sum.real();
}

double excess(const RealMatrix& m) { return m.sum(); }

RealMatrix real_core(const ComplexMatrix& core)
{
    const double scale = std::max(1.0, core.cwiseAbs().maxCoeff());
    require(core.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale, ErrorKind::Contract,
            "real_core: q = 2 core has imaginary entries");
    return core.real();
}

std::vector<cplx> q_diagonal(const std::vector<std::size_t>& labels, std::size_t q)
{
    const std::size_t m = labels.size();
    std::vector<cplx> diag(q * m);
    for (std::size_t s = 0; s < q; ++s) {
        for (std::size_t x = 0; x < m; ++x) {
            diag[m * s + x] = root(labels[x] * s, q);
        }
    }
    return diag;
}

ExcessResult max_excess_q(const CorrelationMatrix& cm)
{
    const std::size_t q = cm.scenario.q;
    const std::size_t m = cm.scenario.m;
    const std::size_t n = q * m;
    if (std::pow(static_cast<double>(q), static_cast<double>(m)) > max_assignments) {
        fail(ErrorKind::Capacity, "max_excess_q: q^m exceeds 2^24 assignments");
    }
    // rows[x][a] = sum_s omega^(a s) M_{ms+x, :}
    std::vector<std::vector<Eigen::RowVectorXcd>> rows(m, std::vector<Eigen::RowVectorXcd>(q));
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t a = 0; a < q; ++a) {
            Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(n);
            for (std::size_t s = 0; s < q; ++s) {
                acc += root(a * s, q) * cm.M.row(m * s + x);
            }
            rows[x][a] = acc;
        }
    }
    std::vector<std::size_t> labels(m, 0);
    std::vector<std::size_t> best_right(m, 0);
    std::vector<std::size_t> right(m, 0);
    ExcessResult best;
    bool have = false;
    while (true) {
        Eigen::RowVectorXcd w = Eigen::RowVectorXcd::Zero(n);
        for (std::size_t x = 0; x < m; ++x) {
            w += rows[x][labels[x]];
        }
        double total = 0.0;
        for (std::size_t y = 0; y < m; ++y) {
            double col_best = -std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < q; ++b) {
                cplx acc = 0.0;
                for (std::size_t t = 0; t < q; ++t) {
                    acc += root(b * t, q) * w(m * t + y);
                }
                if (b == 0 || acc.real() > col_best + 1e-12 * std::max(1.0, std::abs(col_best))) {
                    col_best = acc.real();
                    right[y] = b;
                }
            }
            total += col_best;
        }
        if (!have || total > best.value + 1e-9 * std::max(1.0, std::abs(best.value))) {
            have = true;
            best.value = total;
            best.left_labels = labels;
            best_right = right;
        }
        // Odometer with the last label fastest.
        std::size_t pos = m;
        while (pos > 0 && ++labels[pos - 1] == q) {
            labels[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) {
            break;
        }
    }
    best.right_labels = best_right;
    best.left = q_diagonal(best.left_labels, q);
    best.right = q_diagonal(best.right_labels, q);
    return best;
}

} // namespace qmat::bell
