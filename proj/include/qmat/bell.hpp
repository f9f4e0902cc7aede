#pragma once

#include <optional>
#include <vector>

#include "qmat/numerics.hpp"

namespace qmat::bell {

struct BellScenario {
    std::size_t q = 2;
    std::size_t m = 2;

    void validate() const;
    std::size_t order() const { return q * m; }
};

struct CorrelationMatrix {
    BellScenario scenario;
    ComplexMatrix M;

    // Checks the order q*m and the conjugation symmetry.
    static CorrelationMatrix make(BellScenario scenario, ComplexMatrix m, double tol = 1e-12);
    // Drops the first m rows and columns (the marginal block).
    ComplexMatrix core() const;
    double symmetry_residual() const;
};

// S is indexed [a][b][x][y], flattened as ((a*q + b)*m + x)*m + y.
CorrelationMatrix correlation_matrix(const std::vector<double>& s, BellScenario scenario);

// Sum of all entries; complex input must have a real sum.
double excess(const ComplexMatrix& m);
double excess(const RealMatrix& m);

struct LhvResult {
    double value = 0.0;
    // Maximizing sign assignment for the columns, first component +1.
    std::vector<int> assignment;
};

// max over x in {-1,1}^n of ||core x||_1, by Gray-code enumeration (n <= 24).
LhvResult lhv_value(const RealMatrix& core);
// Real part of a q = 2 core, rejecting material imaginary parts.
RealMatrix real_core(const ComplexMatrix& core);

struct ExcessResult {
    double value = 0.0;
    // Diagonal entries at index m*s + x equal zeta_x^s for q-th roots zeta_x.
    std::vector<cplx> left;
    std::vector<cplx> right;
    std::vector<std::size_t> left_labels;
    std::vector<std::size_t> right_labels;
};

// Maximal excess over q-equivalence, enumerating one side (q^m <= 2^24).
ExcessResult max_excess_q(const CorrelationMatrix& m);
// The diagonal of q-equivalence labels: entry m*s + x is omega^(label_x * s).
std::vector<cplx> q_diagonal(const std::vector<std::size_t>& labels, std::size_t q);

struct BoundReport {
    double numerical_radius = 0.0;
    double sigma_max = 0.0;
    double nu = 0.0;
    double c_radius = 0.0;
    double q_singular = 0.0;
    double c_taxicab = 0.0;
};

double numerical_radius(const ComplexMatrix& m);
BoundReport bounds(const ComplexMatrix& m);

RealMatrix circulant_real(const std::vector<double>& first_row);
// M_n = circ[-1 (floor(n/2) times), +1 (ceil(n/2) times)].
RealMatrix circulant_bell(std::size_t n);
double circulant_quantum_value(std::size_t n);
// A(k) = 2k(k+1)+1 for n = 2k+1, 8k^2 for n = 4k and 4A(k) for n = 4k+2.
double classical_sequence(std::size_t n);
// Settings that reach n * sigma_max(M_n) with the qubit operator.
std::pair<std::vector<double>, std::vector<double>> circulant_optimal_phases(std::size_t n);

struct QubitBellReport {
    ComplexMatrix op;
    double max_eigenvalue = 0.0;
    std::optional<double> c;
};

// X(phi) = [[cos t, -sin t], [-sin t, -cos t]], t = 2 pi phi / n.
ComplexMatrix qubit_observable(double phi, std::size_t n);
QubitBellReport qubit_bell_operator(const RealMatrix& core, const std::vector<double>& alpha,
                                    const std::vector<double>& beta);

std::vector<std::vector<int>> unbiased_vectors(const RealMatrix& h);

struct TightnessReport {
    double classical_value = 0.0;
    std::size_t vertex_count = 0;
    std::size_t affine_rank = 0;
    bool is_tight = false;
};

TightnessReport tightness(const RealMatrix& h);

} // namespace qmat::bell
