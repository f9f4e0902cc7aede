#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qmat/errors.hpp"

namespace qmat {

using cplx = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

struct ToleranceConfig {
    double unitarity_tol = 1e-10;
    double rank_gap_tol = 1e-8;
    double phase_cluster_tol = 1e-8;
    double convergence_tol = 1e-12;

    // Throws Contract unless every tolerance lies in (0, 1).
    void validate() const;
};

bool is_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(const ComplexMatrix& m, const char* what);

// Singular values in nonincreasing order; length min(rows, cols).
std::vector<double> svd_values(const ComplexMatrix& m);
std::vector<double> svd_values(const RealMatrix& m);

// Nearest unitary W V^dagger from M = W diag(sigma) V^dagger.
ComplexMatrix polar_unitary(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Number of sigma_i strictly above tol * sigma_0.
std::size_t rank_from_singulars(const std::vector<double>& sigmas, double tol);

// exp(i H) for Hermitian H, through the spectral decomposition.
ComplexMatrix matrix_exponential_hermitian(const ComplexMatrix& h,
                                           const ToleranceConfig& tol = {});

double frobenius(const ComplexMatrix& m);
// ||M M^dagger - s I||_F.
double gram_deviation(const ComplexMatrix& m, double scale = 1.0);
bool is_unitary(const ComplexMatrix& m, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);
RealMatrix gaussian_real_matrix(std::size_t rows, std::size_t cols, Rng& rng);
// Haar-distributed unitary via polar projection of a complex Ginibre matrix.
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);
ComplexMatrix permutation_matrix(const std::vector<std::size_t>& image);

} // namespace qmat
