#include "qmat/ame.hpp"

#include <cmath>
#include <sstream>

namespace qmat::ame {

BipartiteMatrix BipartiteMatrix::make(ComplexMatrix m, std::size_t d)
{
    require(d >= 1, ErrorKind::Dimension, "BipartiteMatrix: local dimension must be positive");
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != d * d) {
        std::ostringstream os;
        os << "BipartiteMatrix: expected order " << d * d << ", got " << m.rows() << "x" << m.cols();
        fail(ErrorKind::Dimension, os.str());
    }
    require_finite(m, "BipartiteMatrix");
    return {d, std::move(m)};
}

BipartiteMatrix BipartiteMatrix::infer(ComplexMatrix m)
{
    require_square(m, "BipartiteMatrix");
    const auto n = static_cast<std::size_t>(m.rows());
    auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    require(d * d == n, ErrorKind::Dimension, "BipartiteMatrix: order is not a perfect square");
    return make(std::move(m), d);
}

ComplexMatrix realign(const ComplexMatrix& x, std::size_t d, Realignment kind)
{
    require(static_cast<std::size_t>(x.rows()) == d * d && x.rows() == x.cols(),
            ErrorKind::Dimension, "realign: order must equal d^2");
    if (kind == Realignment::T) {
        return x.transpose();
    }
    ComplexMatrix y(x.rows(), x.cols());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < d; ++l) {
                for (std::size_t m = 0; m < d; ++m) {
                    y(j * d + k, l * d + m) = kind == Realignment::R ? x(j * d + l, k * d + m)
                                                                     : x(j * d + m, l * d + k);
                }
            }
        }
    }
    return y;
}

BipartiteMatrix realign(const BipartiteMatrix& b, Realignment kind)
{
    return {b.d, realign(b.M, b.d, kind)};
}

double linear_entropy(const ComplexMatrix& m)
{
    require_square(m, "linear_entropy");
    const double n = static_cast<double>(m.rows());
    require(n > 1.0, ErrorKind::Dimension, "linear_entropy: order must exceed 1");
    const ComplexMatrix a = m * m.adjoint();
    const double tr = a.trace().real();
    require(tr > 0.0, ErrorKind::Degenerate, "linear_entropy: zero matrix");
    const double tr2 = a.squaredNorm();
    return n / (n - 1.0) * (1.0 - tr2 / (tr * tr));
}

double linear_entropy(const BipartiteMatrix& b) { return linear_entropy(b.M); }

BipartiteMatrix swap(std::size_t d)
{
    require(d >= 2, ErrorKind::Dimension, "swap: d must be at least 2");
    ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            s(k * d + j, j * d + k) = 1.0;
        }
    }
    return {d, s};
}

namespace {

std::pair<double, double> entropies(const BipartiteMatrix& b)
{
    const ComplexMatrix us = b.M * swap(b.d).M;
    return {linear_entropy(realign(b.M, b.d, Realignment::R)),
            linear_entropy(realign(us, b.d, Realignment::R))};
}

} // namespace

double entangling_power(const BipartiteMatrix& b) { return ep_gt(b).e_p; }

double gate_typicality(const BipartiteMatrix& b) { return ep_gt(b).g_t; }

EpGtPoint ep_gt(const BipartiteMatrix& b)
{
    const auto [er, ers] = entropies(b);
    return {er + ers - 1.0, er - ers + 1.0};
}

bool is_two_unitary(const BipartiteMatrix& b, double tol)
{
    const double scale = static_cast<double>(b.M.rows());
    return is_unitary(b.M, tol * scale)
           && is_unitary(realign(b.M, b.d, Realignment::R), tol * scale)
           && is_unitary(realign(b.M, b.d, Realignment::Gamma), tol * scale);
}

BipartiteMatrix iso_map(const BipartiteMatrix& x)
{
    const ComplexMatrix r = realign(x.M, x.d, Realignment::R);
    const ComplexMatrix g = realign(x.M, x.d, Realignment::Gamma);
    const ComplexMatrix y = (x.M + realign(r, x.d, Realignment::Gamma)
                             + realign(g, x.d, Realignment::R)) / 3.0;
    return {x.d, y};
}

bool is_permutation_matrix(const ComplexMatrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    std::vector<int> row_count(m.rows(), 0), col_count(m.cols(), 0);
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            const cplx z = m(j, k);
            if (z == cplx(1.0, 0.0)) {
                ++row_count[j];
                ++col_count[k];
            } else if (z != cplx(0.0, 0.0)) {
                return false;
            }
        }
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (row_count[i] != 1 || col_count[i] != 1) {
            return false;
        }
    }
    return true;
}

} // namespace qmat::ame
