#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmat/bell.hpp"

using namespace qmat;
using namespace qmat::bell;

namespace {

constexpr double pi = std::numbers::pi;

RealMatrix chsh()
{
    RealMatrix m(2, 2);
    m << 1, 1, 1, -1;
    return m;
}

// S^{ab}_{xy} = (-1)^(a+b) c_xy for a q = 2 correlation expression.
std::vector<double> correlator_coefficients(const RealMatrix& c)
{
    const auto m = static_cast<std::size_t>(c.rows());
    std::vector<double> s(4 * m * m);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    s[((a * 2 + b) * m + x) * m + y] = ((a + b) % 2 ? -1.0 : 1.0) * c(x, y);
    return s;
}

} // namespace

TEST(CorrelationMatrix, ChshCore)
{
    const auto cm = correlation_matrix(correlator_coefficients(chsh()), {2, 2});
    const RealMatrix core = real_core(cm.core());
    const double scale = core(0, 0);
    EXPECT_GT(scale, 0.0);
    EXPECT_LT((core / scale - chsh()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(cm.M.topLeftCorner(2, 2).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(CorrelationMatrix, ZeroCoefficients)
{
    const auto cm = correlation_matrix(std::vector<double>(36, 0.0), {3, 2});
    EXPECT_EQ(cm.M.cwiseAbs().maxCoeff(), 0.0);
}

TEST(CorrelationMatrix, QutritSymmetry)
{
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    std::vector<double> s(36);
    for (double& v : s) {
        v = g(rng);
    }
    const auto cm = correlation_matrix(s, {3, 2});
    EXPECT_LT(cm.symmetry_residual(), 1e-14);
    EXPECT_NO_THROW(CorrelationMatrix::make({3, 2}, cm.M));
}

TEST(CorrelationMatrix, ShapeAndSymmetryErrors)
{
    EXPECT_THROW(correlation_matrix(std::vector<double>(10, 0.0), {2, 2}), Error);
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    m(2, 4) = cplx(0.0, 1.0);
    EXPECT_THROW(CorrelationMatrix::make({3, 2}, m), Error);
    EXPECT_THROW(BellScenario({1, 2}).validate(), Error);
}

TEST(Excess, Cases)
{
    EXPECT_EQ(excess(oracle::regular_hadamard4()), 8.0);
    EXPECT_EQ(excess(chsh()), 2.0);
    ComplexMatrix z(1, 2);
    z << cplx(0, 1), cplx(0, 1);
    EXPECT_THROW(excess(z), Error);
}

TEST(Excess, RegularHadamardReachesBound)
{
    const RealMatrix h = oracle::regular_hadamard4();
    const double n = 4.0;
    EXPECT_EQ(excess(h), n * std::sqrt(n));
    RealMatrix h16(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            h16.block(4 * i, 4 * j, 4, 4) = h(i, j) * h;
    ASSERT_TRUE(oracle::is_hadamard(h16));
    EXPECT_EQ(excess(h16), 64.0);
}

TEST(LhvValue, Chsh)
{
    const auto r = lhv_value(chsh());
    EXPECT_EQ(r.value, 2.0);
    ASSERT_EQ(r.assignment.size(), 2U);
    EXPECT_EQ(r.assignment[0], 1);
}

TEST(LhvValue, CirculantZeroMinusOneOne)
{
    EXPECT_EQ(lhv_value(circulant_real({0, -1, 1})).value, 4.0);
}

TEST(LhvValue, CirculantThree)
{
    EXPECT_EQ(lhv_value(circulant_bell(3)).value, 5.0);
}

TEST(LhvValue, AssignmentAttainsValue)
{
    std::mt19937_64 rng(2);
    const RealMatrix m = oracle::random_sign_matrix(7, 7, rng);
    const auto r = lhv_value(m);
    Eigen::VectorXd x(7);
    for (int i = 0; i < 7; ++i) {
        x(i) = r.assignment[i];
    }
    EXPECT_EQ((m * x).cwiseAbs().sum(), r.value);
    EXPECT_EQ(r.value, oracle::double_enumeration(m));
}

TEST(LhvValue, CapacityGuard)
{
    try {
        lhv_value(RealMatrix::Ones(25, 25));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
}

TEST(MaxExcessQ, ChshMatchesLhv)
{
    const auto cm = correlation_matrix(correlator_coefficients(chsh()), {2, 2});
    const auto r = max_excess_q(cm);
    EXPECT_NEAR(r.value, lhv_value(real_core(cm.core())).value, 1e-12);
}

TEST(MaxExcessQ, RegularHadamardIdentityOptimal)
{
    const ComplexMatrix m = oracle::embed_core(oracle::regular_hadamard4());
    const auto r = max_excess_q(CorrelationMatrix::make({2, 4}, m));
    EXPECT_EQ(r.value, excess(m));
}

TEST(MaxExcessQ, OrderEightCoreAgainstDoubleEnumeration)
{
    std::mt19937_64 rng(8);
    const RealMatrix core = oracle::random_sign_matrix(8, 8, rng);
    const auto r = max_excess_q(CorrelationMatrix::make({2, 8}, oracle::embed_core(core)));
    EXPECT_EQ(r.value, oracle::double_enumeration(core));
}

TEST(MaxExcessQ, DiagonalsReproduceValue)
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<double> s(9 * 9);
    for (double& v : s) {
        v = g(rng);
    }
    const auto cm = correlation_matrix(s, {3, 3});
    const auto r = max_excess_q(cm);
    cplx total = 0.0;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            total += r.left[i] * cm.M(i, j) * r.right[j];
    EXPECT_NEAR(total.real(), r.value, 1e-10);
    EXPECT_NEAR(r.value, oracle::full_q_enumeration(cm.M, 3, 3), 1e-10);
}

TEST(Bounds, ConstantRowSum)
{
    const RealMatrix h = oracle::regular_hadamard4();
    const auto b = bounds(h.cast<cplx>());
    EXPECT_NEAR(b.c_taxicab, 4.0 * 2.0, 1e-12);
}

TEST(Bounds, IdentityOfOrderTwo)
{
    const auto b = bounds(ComplexMatrix::Identity(2, 2));
    EXPECT_NEAR(b.numerical_radius, 1.0, 1e-10);
    EXPECT_NEAR(b.c_radius, 2.0, 1e-10);
    EXPECT_NEAR(b.q_singular, 2.0, 1e-12);
    EXPECT_NEAR(b.c_taxicab, 2.0, 1e-12);
}

TEST(Bounds, NilpotentRadius)
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_NEAR(numerical_radius(m), 0.5, 1e-10);
    EXPECT_NEAR(numerical_radius(m), oracle::radius_sweep(m, 20000), 1e-7);
}

TEST(Bounds, RandomComplexAgainstSweep)
{
    Rng rng(9);
    const ComplexMatrix m = gaussian_matrix(5, 5, rng);
    const double r = numerical_radius(m);
    const double sweep = oracle::radius_sweep(m, 20000);
    EXPECT_GE(r, sweep - 1e-12);
    EXPECT_LT(r - sweep, 1e-6);
}

TEST(Circulant, OrderSix)
{
    const RealMatrix m = circulant_bell(6);
    const double row[] = {-1, -1, -1, 1, 1, 1};
    for (int k = 0; k < 6; ++k) {
        EXPECT_EQ(m(0, k), row[k]);
    }
    EXPECT_EQ(m, circulant_real({-1, -1, -1, 1, 1, 1}));
}

TEST(Circulant, ClassicalSequence)
{
    const double expected[] = {5, 8, 13, 20, 25, 32, 41, 52, 61, 72};
    for (std::size_t n = 3; n <= 12; ++n) {
        EXPECT_EQ(lhv_value(circulant_bell(n)).value, expected[n - 3]) << "n = " << n;
        EXPECT_EQ(classical_sequence(n), expected[n - 3]) << "n = " << n;
    }
}

TEST(Circulant, EvenSingularValue)
{
    for (std::size_t n = 4; n <= 12; n += 2) {
        EXPECT_NEAR(svd_values(circulant_bell(n)).front(), 2.0 / std::sin(pi / n), 1e-10);
    }
}

TEST(Circulant, AsymptoticRatio)
{
    const double n = 100.0;
    const double ratio = n * 2.0 / std::sin(pi / n) / classical_sequence(100);
    EXPECT_NEAR(ratio, 4.0 / pi, 0.002);
}

TEST(QubitOperator, CirculantZeroMinusOneOne)
{
    const auto r = qubit_bell_operator(circulant_real({0, -1, 1}), {0.0, 2.0, 1.0},
                                       {0.75, 1.75, 2.75});
    EXPECT_NEAR(r.max_eigenvalue, 3.0 * std::sqrt(3.0), 1e-10);
    EXPECT_TRUE(is_hermitian(r.op, 1e-14));
}

TEST(QubitOperator, PrintedPhasesForFour)
{
    const auto r = qubit_bell_operator(circulant_bell(4), {0, 1, 2, 3}, {1.5, 2.5, 3.5, 0.5});
    EXPECT_NEAR(r.max_eigenvalue, 4.0 * 2.0 / std::sin(pi / 4.0), 1e-10);
    ASSERT_TRUE(r.c.has_value());
}

TEST(QubitOperator, ZeroCore)
{
    const auto r = qubit_bell_operator(RealMatrix::Zero(3, 3), {0, 1, 2}, {0, 1, 2});
    EXPECT_EQ(r.op.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(r.max_eigenvalue, 0.0);
}

TEST(QubitOperator, OptimalPhasesReachQuantumValue)
{
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto [alpha, beta] = circulant_optimal_phases(n);
        const auto r = qubit_bell_operator(circulant_bell(n), alpha, beta);
        EXPECT_NEAR(r.max_eigenvalue, circulant_quantum_value(n), 1e-9) << "n = " << n;
    }
}

TEST(Unbiased, RegularOrderFour)
{
    const auto v = unbiased_vectors(oracle::regular_hadamard4());
    ASSERT_FALSE(v.empty());
    EXPECT_NE(std::find(v.begin(), v.end(), std::vector<int>{1, 1, 1, 1}), v.end());
}

TEST(Unbiased, NonSquareOrdersAreEmpty)
{
    EXPECT_TRUE(unbiased_vectors(oracle::sylvester(3)).empty());
    EXPECT_TRUE(unbiased_vectors(chsh()).empty());
}

TEST(Unbiased, RejectsNonSignMatrix)
{
    RealMatrix m = chsh();
    m(0, 0) = 0.5;
    EXPECT_THROW(unbiased_vectors(m), Error);
}

TEST(Tightness, Chsh)
{
    const auto t = tightness(chsh());
    EXPECT_EQ(t.classical_value, 2.0);
    EXPECT_EQ(t.vertex_count, 4U);
    EXPECT_EQ(t.affine_rank, 3U);
    EXPECT_TRUE(t.is_tight);
}

TEST(Tightness, ConstantRowSumOrderFour)
{
    const auto t = tightness(oracle::regular_hadamard4());
    EXPECT_EQ(t.vertex_count, 4U);
    EXPECT_EQ(t.affine_rank, 3U);
    EXPECT_FALSE(t.is_tight);
}

TEST(Tightness, SylvesterOrderEight)
{
    const RealMatrix h = oracle::sylvester(3);
    ASSERT_TRUE(oracle::is_hadamard(h));
    const auto t = tightness(h);
    EXPECT_EQ(t.vertex_count, 64U);
    EXPECT_EQ(t.affine_rank, 63U);
    EXPECT_TRUE(t.is_tight);
}

TEST(Tightness, CapacityGuard)
{
    EXPECT_THROW(tightness(RealMatrix::Ones(13, 13)), Error);
}
