#include "qmat/defect.hpp"

#include <cmath>
#include <numbers>

namespace qmat::defect {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx root_of_unity(std::size_t power, std::size_t order)
{
    return std::polar(1.0, two_pi * static_cast<double>(power % order) / static_cast<double>(order));
}

} // namespace

bool is_prime(std::size_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::size_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

std::vector<ComplexMatrix> mub_prime(std::size_t p)
{
    require(is_prime(p), ErrorKind::Unsupported, "mub_prime: dimension must be prime");
    std::vector<ComplexMatrix> bases;
    bases.push_back(ComplexMatrix::Identity(p, p));
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    if (p == 2) {
        const cplx i(0.0, 1.0);
        ComplexMatrix x(2, 2), y(2, 2);
        x << 1.0, 1.0, 1.0, -1.0;
        y << 1.0, 1.0, i, -i;
        bases.push_back(norm * x);
        bases.push_back(norm * y);
        return bases;
    }
    // Basis k holds the vectors x -> omega^(k x^2 + b x) / sqrt(p), b = 0..p-1.
    for (std::size_t k = 0; k < p; ++k) {
        ComplexMatrix basis(p, p);
        for (std::size_t x = 0; x < p; ++x) {
            for (std::size_t b = 0; b < p; ++b) {
                basis(x, b) = norm * root_of_unity(k * x * x + b * x, p);
            }
        }
        bases.push_back(basis);
    }
    return bases;
}

POVMSet bases_to_set(const std::vector<ComplexMatrix>& bases, std::size_t m)
{
    require(m >= 1 && m <= bases.size(), ErrorKind::Contract,
            "bases_to_set: subset size out of range");
    const auto d = static_cast<std::size_t>(bases.front().rows());
    std::vector<ComplexVector> vectors;
    for (std::size_t b = 0; b < m; ++b) {
        require(static_cast<std::size_t>(bases[b].rows()) == d, ErrorKind::Dimension,
                "bases_to_set: bases of different dimension");
        for (Eigen::Index col = 0; col < bases[b].cols(); ++col) {
            vectors.emplace_back(bases[b].col(col));
        }
    }
    return POVMSet::make(d, std::move(vectors));
}

ComplexMatrix etf_hermitian_fourier(std::size_t k)
{
    require(k >= 2, ErrorKind::Contract, "etf_hermitian_fourier: k must be at least 2");
    const std::size_t n = k * k;
    ComplexMatrix f(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t plus = (a % k) * (b / k);
            const std::size_t minus = (b % k) * (a / k);
            f(a, b) = root_of_unity(plus % k + k - minus % k, k);
        }
    }
    return f;
}

ComplexMatrix conference_c6(double b)
{
    const cplx e = std::polar(1.0, b);
    const cplx ec = std::conj(e);
    ComplexMatrix c(6, 6);
    c << 0, 1, 1, 1, 1, 1,
         1, 0, -1, e, 1, -e,
         1, -1, 0, -e, 1, e,
         1, ec, -ec, 0, -1, 1,
         1, 1, 1, -1, 0, -1,
         1, -ec, ec, 1, -1, 0;
    return c;
}

POVMSet sic_d3(double gamma)
{
    const double norm = 1.0 / std::sqrt(2.0);
    ComplexVector fiducial(3);
    fiducial << norm, norm * std::polar(1.0, gamma), 0.0;
    std::vector<ComplexVector> vectors;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            // X^a Z^b with X|j> = |j+1>, Z|j> = omega^j |j>.
            ComplexVector v(3);
            for (std::size_t j = 0; j < 3; ++j) {
                v((j + a) % 3) = root_of_unity(b * j, 3) * fiducial(j);
            }
            vectors.push_back(v);
        }
    }
    return POVMSet::make(3, std::move(vectors));
}

} // namespace qmat::defect
