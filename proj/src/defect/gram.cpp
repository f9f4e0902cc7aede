#include "qmat/defect.hpp"

#include <cmath>

namespace qmat::defect {

POVMSet POVMSet::make(std::size_t d, std::vector<ComplexVector> vectors)
{
    require(d >= 1, ErrorKind::Dimension, "POVMSet: dimension must be positive");
    require(!vectors.empty(), ErrorKind::Input, "POVMSet: empty vector set");
    for (auto& v : vectors) {
        require(static_cast<std::size_t>(v.size()) == d, ErrorKind::Dimension,
                "POVMSet: vector length differs from d");
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            require(std::isfinite(v(i).real()) && std::isfinite(v(i).imag()), ErrorKind::Input,
                    "POVMSet: non-finite component");
        }
        const double norm = v.norm();
        require(norm > 0.0, ErrorKind::Degenerate, "POVMSet: zero vector");
        v /= norm;
    }
    POVMSet set;
    set.d = d;
    set.vectors = std::move(vectors);
    return set;
}

GramMatrix gram_from_vectors(const POVMSet& set)
{
    require(!set.vectors.empty(), ErrorKind::Input, "gram_from_vectors: empty set");
    const auto n = set.vectors.size();
    ComplexMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            const cplx v = set.vectors[j].dot(set.vectors[k]);
            g(j, k) = v;
            g(k, j) = std::conj(v);
        }
        g(j, j) = g(j, j).real();
    }
    return {g, set.d};
}

bool is_valid_povm_gram(const ComplexMatrix& g, std::size_t n, std::size_t d)
{
    require_square(g, "is_valid_povm_gram");
    if (static_cast<std::size_t>(g.rows()) != n || d == 0) {
        return false;
    }
    const double ratio = static_cast<double>(n) / static_cast<double>(d);
    return frobenius(g * g - ratio * g) <= 1e-8 * static_cast<double>(n);
}

ComplexMatrix gram_to_hermitian_unitary(const ComplexMatrix& g, std::size_t n, std::size_t d)
{
    require(is_valid_povm_gram(g, n, d), ErrorKind::Contract,
            "gram_to_hermitian_unitary: not a valid POVM Gram matrix");
    const double factor = 2.0 * static_cast<double>(d) / static_cast<double>(n);
    ComplexMatrix u = -factor * g;
    u.diagonal().array() += 1.0;
    return u;
}

} // namespace qmat::defect
