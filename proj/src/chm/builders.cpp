#include "qmat/chm.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qmat::chm {

double deviation(const ComplexMatrix& m)
{
    return gram_deviation(m, static_cast<double>(m.rows()));
}

HadamardCandidate HadamardCandidate::of(ComplexMatrix m)
{
    HadamardCandidate c;
    c.deviation = chm::deviation(m);
    c.matrix = std::move(m);
    return c;
}

ComplexMatrix fourier(std::size_t n)
{
    require(n >= 1, ErrorKind::Dimension, "fourier: N must be at least 1");
    ComplexMatrix f(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            // Reduce jk mod N first so large orders keep full phase accuracy.
            const double frac = static_cast<double>((j * k) % n) / static_cast<double>(n);
            f(j, k) = std::polar(1.0, 2.0 * std::numbers::pi * frac);
        }
    }
    return f;
}

ComplexMatrix dephase(const ComplexMatrix& m)
{
    require_square(m, "dephase");
    const auto n = m.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        require(std::abs(m(0, k)) > 0.0 && std::abs(m(k, 0)) > 0.0, ErrorKind::Degenerate,
                "dephase: zero entry in the first row or column");
    }
    ComplexMatrix out = m;
    // Column phases make the first row real positive, row phases the first column.
    for (Eigen::Index k = 0; k < n; ++k) {
        const cplx unit = m(0, k) / std::abs(m(0, k));
        out.col(k) *= std::conj(unit);
    }
    for (Eigen::Index j = 1; j < n; ++j) {
        const cplx unit = out(j, 0) / std::abs(out(j, 0));
        out.row(j) *= std::conj(unit);
    }
    // Remove round-off in the now real border.
    for (Eigen::Index k = 0; k < n; ++k) {
        out(0, k) = out(0, k).real();
        out(k, 0) = out(k, 0).real();
    }
    return out;
}

ComplexMatrix circulant(const std::vector<cplx>& first_row)
{
    const auto n = first_row.size();
    require(n >= 1, ErrorKind::Dimension, "circulant: empty first row");
    ComplexMatrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            c(j, k) = first_row[(k + n - j) % n];
        }
    }
    return c;
}

ComplexMatrix build_LN(std::size_t n, const std::vector<cplx>& block_values)
{
    if (n < 3 || n % 4 != 3) {
        std::ostringstream os;
        os << "build_LN: N = " << n << " is not of the form 3 + 4k";
        fail(ErrorKind::Unsupported, os.str());
    }
    const std::size_t blocks = (n - 3) / 2 + 1;
    require(block_values.size() == blocks, ErrorKind::Dimension,
            "build_LN: expected (N-3)/2 + 1 block values");
    ComplexMatrix l = ComplexMatrix::Ones(n, n);
    for (std::size_t bi = 0; bi < blocks; ++bi) {
        for (std::size_t bj = 0; bj < blocks; ++bj) {
            const cplx c = block_values[(bj + blocks - bi) % blocks];
            const auto r = 1 + 2 * bi;
            const auto s = 1 + 2 * bj;
            l(r, s) = c;
            l(r, s + 1) = std::conj(c);
            l(r + 1, s) = std::conj(c);
            l(r + 1, s + 1) = c;
        }
    }
    return l;
}

ComplexMatrix t6_matrix(double gamma)
{
    require(gamma >= 0.5 && gamma <= 1.5, ErrorKind::Contract, "T6: gamma must lie in [1/2, 3/2]");
    const double pi = std::numbers::pi;
    // cos(pi gamma) written as sin(pi (1/2 - gamma)) is exact at the endpoints.
    const double cosg = std::sin(pi * (0.5 - gamma));
    const double sing = std::cos(pi * (0.5 - gamma));
    const cplx a(cosg, sing);
    const cplx b = a * a;
    // a^4 + 4a^3 + 2a^2 + 4a + 1 = a^2 y (y + 4) with y = a + 1/a.
    const double y = 2.0 * cosg;
    const cplx root = std::sqrt(a * a * (y * (y + 4.0)));
    const cplx c = (-2.0 * a - 1.0 - b - root) / 2.0;
    const cplx d = (-2.0 * a - 1.0 - b + root) / 2.0;
    ComplexMatrix t(6, 6);
    t << 1, 1, 1, 1, 1, 1,
         1, a, b, c, a, d,
         1, b, a, a, c, d,
         1, d, a, -a, -1.0, -d,
         1, a, d, -1.0, -a, -d,
         1, c, c, -c, -c, -1.0;
    return t;
}

ComplexMatrix t9_matrix(cplx a, cplx b, cplx c, cplx d)
{
    const cplx A = 1.0 / a, B = 1.0 / b, C = 1.0 / c, D = 1.0 / d;
    ComplexMatrix t(9, 9);
    t << 1, 1, 1, 1, 1, 1, 1, 1, 1,
         1, a, d, A, C, B, c, b, D,
         1, b, c, B, a, D, A, d, C,
         1, c, B, C, d, a, D, A, b,
         1, B, C, b, A, d, a, D, c,
         1, d, A, D, b, C, B, c, a,
         1, A, D, a, c, b, C, B, d,
         1, C, b, c, D, A, d, a, B,
         1, D, a, d, B, c, b, C, A;
    return t;
}

ComplexMatrix v8_matrix(cplx a, cplx b, cplx c)
{
    const cplx one = 1.0;
    ComplexMatrix v(8, 8);
    v << -one, -one, b, b, c, c, a, a,
         -one, b, -one, c, b, a, c, -a,
         b, -one, c, -one, a, b, -a, c,
         b, c, -one, a, -one, -a, b, -c,
         c, b, a, -one, -a, -one, -c, b,
         c, a, b, -a, -one, -c, -one, -b,
         a, c, -a, b, -c, -one, -b, -one,
         a, -a, c, -c, b, -b, -one, one;
    return v;
}

std::vector<cplx> t9_constraints(cplx a, cplx b, cplx c, cplx d)
{
    return {
        1.0 + a + 1.0 / a + b + 1.0 / b + c + 1.0 / c + d + 1.0 / d,
        1.0 + a * a + 1.0 / (a * a) + b * b + 1.0 / (b * b) + c * c + 1.0 / (c * c) + d * d
            + 1.0 / (d * d),
        1.0 + a / b + b / a + b / d + d / b + c / d + d / c + a * c + 1.0 / (a * c),
        1.0 + a / c + c / a + a * b + 1.0 / (a * b) + c * d + 1.0 / (c * d) + b * d
            + 1.0 / (b * d),
        1.0 + a / d + d / a + b / c + c / b + b * c + 1.0 / (b * c) + a * d + 1.0 / (a * d),
    };
}

std::vector<cplx> v8_constraints(cplx a, cplx b, cplx c)
{
    return {
        -1.0 / b - b + b / c + c / b + c / a + a / c,
        -1.0 / b - b - 1.0 / c - c - c / a - a / c + b / a + a / b,
        1.0 / c + c + 1.0 / a + a + b / a + a / b,
    };
}

} // namespace qmat::chm
