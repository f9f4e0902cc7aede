#include "qmat/bell.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace qmat::bell {

namespace {

constexpr std::size_t max_order = 12;

} // namespace

TightnessReport tightness(const RealMatrix& h)
{
    require(h.rows() == h.cols() && h.rows() >= 2, ErrorKind::Dimension,
            "tightness: need a square matrix of order at least 2");
    require(h.allFinite(), ErrorKind::Input, "tightness: non-finite entry");
    const auto m = static_cast<std::size_t>(h.rows());
    if (m > max_order) {
        std::ostringstream os;
        os << "tightness: order " << m << " exceeds the enumeration limit of " << max_order;
        fail(ErrorKind::Capacity, os.str());
    }
    const double scale = std::max(1.0, h.cwiseAbs().sum());
    const double zero_tol = 1e-12 * scale;

    // Optimal x with x_0 = +1 represent every vertex once, since (x, y) and (-x, -y) coincide.
    const RealMatrix ht = h.transpose();
    std::vector<Eigen::VectorXd> optimal;
    double best = -1.0;
    Eigen::VectorXd x = Eigen::VectorXd::Ones(m);
    Eigen::VectorXd v = ht * x;
    const std::uint64_t steps = std::uint64_t{1} << (m - 1);
    for (std::uint64_t i = 0; i < steps; ++i) {
        if (i > 0) {
            const auto bit = static_cast<Eigen::Index>(std::countr_zero(i)) + 1;
            v -= 2.0 * x(bit) * ht.col(bit);
            x(bit) = -x(bit);
        }
        const double value = v.cwiseAbs().sum();
        if (value > best + zero_tol) {
            best = value;
            optimal.clear();
        }
        if (value >= best - zero_tol) {
            optimal.push_back(x);
        }
    }

    std::vector<Eigen::VectorXd> vertices;
    for (const auto& xo : optimal) {
        const Eigen::VectorXd w = ht * xo;
        std::vector<Eigen::Index> zeros;
        Eigen::VectorXd y(m);
        for (std::size_t k = 0; k < m; ++k) {
            if (std::abs(w(k)) <= zero_tol) {
                zeros.push_back(static_cast<Eigen::Index>(k));
                y(k) = 1.0;
            } else {
                y(k) = w(k) > 0.0 ? 1.0 : -1.0;
            }
        }
        // Zero components admit both signs.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zeros.size()); ++mask) {
            for (std::size_t z = 0; z < zeros.size(); ++z) {
                y(zeros[z]) = (mask >> z) & 1U ? -1.0 : 1.0;
            }
            Eigen::VectorXd vertex(m * m);
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < m; ++k) {
                    vertex(j * m + k) = xo(j) * y(k);
                }
            }
            vertices.push_back(std::move(vertex));
        }
    }

    TightnessReport report;
    report.classical_value = best;
    report.vertex_count = vertices.size();
    if (vertices.size() > 1) {
        RealMatrix diffs(vertices.size() - 1, m * m);
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            diffs.row(i - 1) = (vertices[i] - vertices[0]).transpose();
        }
        report.affine_rank = rank_from_singulars(svd_values(diffs), 1e-8);
    }
    report.is_tight = report.affine_rank == m * m - 1;
    return report;
}

} // namespace qmat::bell
