#pragma once

#include <string>
#include <vector>

#include "qmat/numerics.hpp"

namespace qmat::defect {

struct POVMSet {
    std::size_t d = 0;
    std::vector<ComplexVector> vectors;

    // Normalizes every vector; rejects zero vectors and mismatched lengths.
    static POVMSet make(std::size_t d, std::vector<ComplexVector> vectors);
    std::size_t size() const { return vectors.size(); }
};

struct GramMatrix {
    ComplexMatrix G;
    std::size_t source_dim = 0;
};

struct RestrictedDefectReport {
    std::size_t tau = 0;
    std::size_t f = 0;
    std::size_t z = 0;
    std::size_t r = 0;
    long delta = 0;
    std::size_t equations = 0;
    std::vector<double> singular_values;
};

struct ConfidenceBound {
    double sigma1 = 0.0;
    double f_dN = 0.0;
    double s_max = 0.0;

    // Perturbation bound on singular values at inaccuracy factor s.
    double perturbation(double s) const { return s * f_dN; }
};

GramMatrix gram_from_vectors(const POVMSet& set);
bool is_valid_povm_gram(const ComplexMatrix& g, std::size_t n, std::size_t d);
// U = I - (2d/N) G.
ComplexMatrix gram_to_hermitian_unitary(const ComplexMatrix& g, std::size_t n, std::size_t d);

RestrictedDefectReport restricted_defect(const ComplexMatrix& u, const ToleranceConfig& tol = {});
// Gram, Hermitian unitary and restricted defect in one pass.
RestrictedDefectReport restricted_defect_of_set(const POVMSet& set, const ToleranceConfig& tol = {});

bool is_prime(std::size_t n);
// p + 1 bases as unitaries whose columns are the basis vectors; the computational basis comes first.
std::vector<ComplexMatrix> mub_prime(std::size_t p);
// Columns of the first m bases.
POVMSet bases_to_set(const std::vector<ComplexMatrix>& bases, std::size_t m);

ComplexMatrix etf_hermitian_fourier(std::size_t k);
ComplexMatrix conference_c6(double b);
POVMSet sic_d3(double gamma);

POVMSet dataset_load(const std::string& path);
void dataset_save(const POVMSet& set, const std::string& path);

ConfidenceBound robustness_bound(std::size_t d, std::size_t n, double sigma1, double s = 1.0);

} // namespace qmat::defect
