#include "qmat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>


namespace qmat {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Input: return "input";
    }
    return "unknown";
}

void ToleranceConfig::validate() const
{
    for (double t : {unitarity_tol, rank_gap_tol, phase_cluster_tol, convergence_tol}) {
        require(t > 0.0 && t < 1.0, ErrorKind::Contract,
                "tolerances must lie strictly between 0 and 1");
    }
}

bool is_finite(const ComplexMatrix& m)
{
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const cplx z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

void require_finite(const ComplexMatrix& m, const char* what)
{
    require(is_finite(m), ErrorKind::Input, std::string(what) + ": non-finite entry");
}

void require_square(const ComplexMatrix& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a nonempty square matrix, got " << m.rows() << "x" << m.cols();
        fail(ErrorKind::Dimension, os.str());
    }
}

namespace {

// One-sided Jacobi for singular values: Eigen 3.4's divide-and-conquer SVD returns NaN
// singular values on the highly degenerate defect systems.
template <typename Matrix>
std::vector<double> singular_values_of(const Matrix& m)
{
    require(m.rows() > 0 && m.cols() > 0, ErrorKind::Dimension, "svd_values: empty matrix");
    Eigen::JacobiSVD<Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(m);
    const auto& s = svd.singularValues();
    std::vector<double> out(s.data(), s.data() + s.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    for (double& v : out) {
        v = std::max(v, 0.0);
    }
    return out;
}

} // namespace

std::vector<double> svd_values(const ComplexMatrix& m) { return singular_values_of(m); }

std::vector<double> svd_values(const RealMatrix& m) { return singular_values_of(m); }

namespace {

template <typename Svd>
ComplexMatrix polar_from(const Svd& svd, const ToleranceConfig& tol)
{
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    if (!(smax > 0.0) || smin < tol.rank_gap_tol * smax) {
        std::ostringstream os;
        os << "polar_unitary: rank-deficient input (sigma_min/sigma_max = "
           << (smax > 0.0 ? smin / smax : 0.0) << ")";
        fail(ErrorKind::Singular, os.str());
    }
    return svd.matrixU() * svd.matrixV().adjoint();
}

} // namespace

// Divide-and-conquer for speed in the iterative maps, Jacobi when it breaks down.
ComplexMatrix polar_unitary(const ComplexMatrix& m, const ToleranceConfig& tol)
{
    require_square(m, "polar_unitary");
    Eigen::BDCSVD<Eigen::MatrixXcd> fast(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (fast.singularValues().allFinite()) {
        return polar_from(fast, tol);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> exact(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return polar_from(exact, tol);
}

std::size_t rank_from_singulars(const std::vector<double>& sigmas, double tol)
{
    if (sigmas.empty() || !(sigmas.front() > 0.0)) {
        return 0;
    }
    const double cut = tol * sigmas.front();
    return static_cast<std::size_t>(
        std::count_if(sigmas.begin(), sigmas.end(), [cut](double s) { return s > cut; }));
}

ComplexMatrix matrix_exponential_hermitian(const ComplexMatrix& h, const ToleranceConfig& tol)
{
    require_square(h, "matrix_exponential_hermitian");
    require(is_hermitian(h, tol.unitarity_tol * std::max(1.0, frobenius(h))),
            ErrorKind::Contract, "matrix_exponential_hermitian: input is not Hermitian");
    const Eigen::MatrixXcd herm = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::polar(1.0, lambda(i));
    }
    const Eigen::MatrixXcd& v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

double gram_deviation(const ComplexMatrix& m, double scale)
{
    require_square(m, "gram_deviation");
    const Eigen::MatrixXcd g = m * m.adjoint();
    return (g - scale * Eigen::MatrixXcd::Identity(m.rows(), m.rows())).norm();
}

bool is_unitary(const ComplexMatrix& m, double tol)
{
    return m.rows() == m.cols() && m.rows() > 0 && gram_deviation(m) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol)
{
    return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = cplx(re, im);
        }
    }
    return m;
}

RealMatrix gaussian_real_matrix(std::size_t rows, std::size_t cols, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng)
{
    return polar_unitary(gaussian_matrix(n, n, rng));
}

ComplexMatrix permutation_matrix(const std::vector<std::size_t>& image)
{
    const auto n = image.size();
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        require(image[j] < n && !seen[image[j]], ErrorKind::Input,
                "permutation_matrix: image is not a permutation");
        seen[image[j]] = true;
        p(image[j], j) = 1.0;
    }
    return p;
}

} // namespace qmat
