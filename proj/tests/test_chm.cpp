#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <numbers>

#include "oracles.hpp"
#include "qmat/chm.hpp"

using namespace qmat;
using chm::catalogue;

namespace {

constexpr double pi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::Input;
}

} // namespace

TEST(Fourier, OrderTwo)
{
    const ComplexMatrix f = chm::fourier(2);
    EXPECT_LT(std::abs(f(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(f(0, 1) - 1.0), 1e-15);
    EXPECT_LT(std::abs(f(1, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(f(1, 1) + 1.0), 1e-15);
}

TEST(Fourier, OrderFourIsButsonFour)
{
    const ComplexMatrix f = chm::fourier(4);
    const cplx roots[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    for (Eigen::Index j = 0; j < 4; ++j) {
        for (Eigen::Index k = 0; k < 4; ++k) {
            double best = 1.0;
            for (cplx r : roots) {
                best = std::min(best, std::abs(f(j, k) - r));
            }
            EXPECT_LT(best, 1e-14);
        }
    }
    const auto fit = chm::butson_fit(f, 64);
    ASSERT_TRUE(fit.is_butson);
    EXPECT_EQ(*fit.q, 4);
}

TEST(Fourier, OrderElevenHaagerup)
{
    EXPECT_EQ(chm::haagerup_card(chm::fourier(11)).cardinality, 11U);
}

TEST(Fourier, ZeroOrderIsDimensionError)
{
    EXPECT_EQ(kind_of([] { chm::fourier(0); }), ErrorKind::Dimension);
}

TEST(IsChm, Cases)
{
    EXPECT_TRUE(chm::is_chm(chm::fourier(6)));
    EXPECT_FALSE(chm::is_chm(ComplexMatrix::Identity(3, 3)));
    EXPECT_EQ(kind_of([] { chm::is_chm(ComplexMatrix::Ones(2, 3)); }), ErrorKind::Dimension);
}

TEST(IsChm, T6AtHalfFromPublishedFormulas)
{
    // At gamma = 1/2 the published closed forms give a = i and b = a^2; c and d
    // are the two branches of the square root.
    const cplx a(0.0, 1.0);
    const cplx b = a * a;
    const double y = (a + 1.0 / a).real();
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
    for (Eigen::Index j = 0; j < 6; ++j) {
        for (Eigen::Index k = 0; k < 6; ++k) {
            EXPECT_NEAR(std::abs(t(j, k)), 1.0, 1e-12);
        }
    }
    EXPECT_LT((t * t.adjoint() - 6.0 * ComplexMatrix::Identity(6, 6)).norm(), 1e-9);
    const ComplexMatrix t6 = catalogue("T6", {0.5});
    EXPECT_TRUE(chm::is_chm(t6));
    EXPECT_LT((t6 - t).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Dephase, AlreadyDephasedUnchanged)
{
    const ComplexMatrix f = chm::fourier(4);
    EXPECT_LT((chm::dephase(f) - f).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dephase, RowPhaseAbsorbed)
{
    ComplexMatrix f = chm::fourier(4);
    f.row(0) *= cplx(0, 1);
    EXPECT_LT((chm::dephase(f) - chm::fourier(4)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dephase, SinkhornOutputOfOrderSix)
{
    const auto run = chm::sinkhorn_chm(6, 1, 10000);
    ASSERT_TRUE(run.converged) << run.note;
    const ComplexMatrix d = chm::dephase(run.best.matrix);
    for (Eigen::Index k = 0; k < 6; ++k) {
        EXPECT_LT(std::abs(d(0, k) - 1.0), 1e-12);
        EXPECT_LT(std::abs(d(k, 0) - 1.0), 1e-12);
    }
    for (Eigen::Index j = 0; j < 6; ++j) {
        for (Eigen::Index k = 0; k < 6; ++k) {
            EXPECT_NEAR(std::abs(d(j, k)), std::abs(run.best.matrix(j, k)), 1e-12);
        }
    }
    EXPECT_EQ(d.bottomRightCorner(5, 5).size(), 25);
}

TEST(Dephase, ZeroInBorderIsDegenerate)
{
    ComplexMatrix m = chm::fourier(3);
    m(0, 2) = 0.0;
    EXPECT_EQ(kind_of([&] { chm::dephase(m); }), ErrorKind::Degenerate);
}

TEST(Sinkhorn, OrderSixConverges)
{
    const auto run = chm::sinkhorn_chm(6, 7, 10000);
    EXPECT_TRUE(run.converged) << run.note;
    EXPECT_LT(run.best.deviation, 1e-9);
    EXPECT_TRUE(chm::is_chm(run.best.matrix));
}

TEST(Sinkhorn, OrderTwoIsEquivalentToF2)
{
    const auto run = chm::sinkhorn_chm(2, 3, 10000);
    ASSERT_TRUE(run.converged) << run.note;
    const ComplexMatrix d = chm::dephase(run.best.matrix);
    EXPECT_LT((d - chm::fourier(2)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Sinkhorn, ExhaustedRunReportsDeviation)
{
    const auto run = chm::sinkhorn_chm(7, 1, 1);
    EXPECT_FALSE(run.converged);
    EXPECT_FALSE(run.note.empty());
    EXPECT_GT(run.best.deviation, 0.0);
    EXPECT_NEAR(run.best.deviation, chm::deviation(run.best.matrix), 1e-12);
}

TEST(RandomWalk, OrderFourNoFixedPhases)
{
    chm::WalkOptions opt;
    opt.restarts = 5;
    const auto run = chm::random_walk_chm(4, 1, opt);
    ASSERT_TRUE(run.converged) << run.note;
    EXPECT_LT(run.best.deviation, 1e-9);
}

TEST(RandomWalk, SymmetricOrderSix)
{
    chm::WalkOptions opt;
    opt.symmetric = true;
    opt.restarts = 10;
    const auto run = chm::random_walk_chm(6, 2, opt);
    ASSERT_TRUE(run.converged) << run.note;
    EXPECT_LT(run.best.deviation, 1e-9);
    EXPECT_LT((run.best.matrix - run.best.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RandomWalk, OrderTwoWithFixedCore)
{
    chm::WalkOptions opt;
    opt.fixed_mask = {{true}};
    opt.fixed_phases = {{pi}};
    const auto run = chm::random_walk_chm(2, 0, opt);
    EXPECT_TRUE(run.converged);
    EXPECT_LT(run.best.deviation, 1e-12);
    EXPECT_LT((chm::dephase(run.best.matrix) - chm::fourier(2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RandomWalk, InfeasiblePatternReported)
{
    chm::WalkOptions opt;
    opt.fixed_mask = {{true}};
    opt.fixed_phases = {{0.0}};
    const auto run = chm::random_walk_chm(2, 0, opt);
    EXPECT_FALSE(run.converged);
    EXPECT_NE(run.note.find("infeasible"), std::string::npos);
}

TEST(RandomWalk, FixedEntriesNeverMove)
{
    chm::WalkOptions opt;
    opt.fixed_mask.assign(3, std::vector<bool>(3, false));
    opt.fixed_phases.assign(3, std::vector<double>(3, 0.0));
    opt.fixed_mask[0][0] = true;
    opt.fixed_phases[0][0] = pi;
    opt.fixed_mask[2][1] = true;
    opt.fixed_phases[2][1] = pi / 2;
    const auto run = chm::random_walk_chm(4, 9, opt);
    EXPECT_LT(std::abs(run.best.matrix(1, 1) - std::polar(1.0, pi)), 1e-14);
    EXPECT_LT(std::abs(run.best.matrix(3, 2) - std::polar(1.0, pi / 2)), 1e-14);
}

TEST(RandomWalk, WrongMaskShapeIsDimensionError)
{
    chm::WalkOptions opt;
    opt.fixed_mask = {{true}};
    opt.fixed_phases = {{0.0}};
    EXPECT_EQ(kind_of([&] { chm::random_walk_chm(4, 0, opt); }), ErrorKind::Dimension);
}

TEST(Haagerup, F2BruteForce)
{
    // All 16 quartets of F2 are +1 or -1.
    const ComplexMatrix f = chm::fourier(2);
    std::set<int> seen;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m) {
                    const cplx v = f(j, k) * f(l, m) * std::conj(f(j, m)) * std::conj(f(l, k));
                    seen.insert(static_cast<int>(std::lround(v.real())));
                }
    EXPECT_EQ(seen.size(), 2U);
    EXPECT_EQ(chm::haagerup_card(f).cardinality, seen.size());
}

TEST(Haagerup, NonChmIsContractError)
{
    EXPECT_EQ(kind_of([] { chm::haagerup_card(ComplexMatrix::Ones(3, 3)); }),
              ErrorKind::Contract);
}

TEST(Butson, Fourier8)
{
    const auto fit = chm::butson_fit(chm::fourier(8), 64);
    ASSERT_TRUE(fit.is_butson);
    EXPECT_EQ(*fit.q, 8);
}

TEST(Butson, B8aIsTwenty)
{
    const auto fit = chm::butson_fit(catalogue("B8a"), 100);
    ASSERT_TRUE(fit.is_butson);
    EXPECT_EQ(*fit.q, 20);
}

TEST(Butson, T9IsNotButson)
{
    const auto fit = chm::butson_fit(catalogue("T9"), 1 << 16);
    EXPECT_FALSE(fit.is_butson);
    EXPECT_FALSE(fit.q.has_value());
}

TEST(Circulant, OrderSevenSolutionsIncludeFourier)
{
    bool found_fourier = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto run = chm::circulant_chm_solve(7, seed);
        ASSERT_TRUE(run.converged) << run.note;
        EXPECT_TRUE(chm::is_chm(run.best.matrix));
        if (chm::haagerup_card(run.best.matrix).cardinality
            == chm::haagerup_card(chm::fourier(7)).cardinality) {
            found_fourier = true;
        }
    }
    EXPECT_TRUE(found_fourier);
}

TEST(Circulant, OrderFourSubstitution)
{
    const std::vector<cplx> c = {-1.0, 1.0, 1.0, 1.0};
    for (std::size_t k = 1; k < 4; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            s += c[j] / c[(j + k) % 4];
        }
        EXPECT_LT(std::abs(s), 1e-15);
    }
    EXPECT_TRUE(chm::is_chm(chm::circulant(c)));
    const auto run = chm::circulant_chm_solve(4, 5);
    EXPECT_TRUE(run.converged) << run.note;
}

TEST(Circulant, OrderEightHasDefectiveSolutions)
{
    bool nonzero = false;
    for (std::uint64_t seed = 0; seed < 20 && !nonzero; ++seed) {
        const auto run = chm::circulant_chm_solve(8, seed);
        if (run.converged && chm::unitary_defect(run.best.matrix).defect > 0) {
            nonzero = true;
        }
    }
    EXPECT_TRUE(nonzero);
}

TEST(BuildLN, ThreeGivesF3)
{
    const ComplexMatrix l3 = chm::build_LN(3, {std::polar(1.0, 2.0 * pi / 3.0)});
    EXPECT_LT((l3 - chm::fourier(3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildLN, SevenFromSolver)
{
    bool ok = false;
    for (std::uint64_t seed = 0; seed < 6 && !ok; ++seed) {
        const auto run = chm::solve_LN(7, seed);
        ok = run.converged && run.best.deviation < 1e-8;
    }
    EXPECT_TRUE(ok);
}

TEST(BuildLN, FiveUnsupported)
{
    EXPECT_EQ(kind_of([] { chm::build_LN(5, {1.0, 1.0}); }), ErrorKind::Unsupported);
}

TEST(UnitaryDefect, PublishedAnchors)
{
    EXPECT_EQ(chm::unitary_defect(chm::fourier(7) / std::sqrt(7.0)).defect, 0);
    EXPECT_EQ(chm::unitary_defect(catalogue("T9")).defect, 0);
    EXPECT_EQ(chm::unitary_defect(catalogue("B8a")).defect, 7);
    EXPECT_EQ(chm::unitary_defect(catalogue("B8b")).defect, 11);
}

TEST(UnitaryDefect, RescalesChmInput)
{
    EXPECT_EQ(chm::unitary_defect(chm::fourier(5)).defect, 0);
    EXPECT_EQ(chm::unitary_defect(chm::fourier(4)).defect, 1);
}

TEST(UnitaryDefect, NonUnitaryIsContractError)
{
    EXPECT_EQ(kind_of([] { chm::unitary_defect(ComplexMatrix::Ones(3, 3)); }),
              ErrorKind::Contract);
}

TEST(Catalogue, T6AtOne)
{
    const ComplexMatrix t6 = catalogue("T6", {1.0});
    EXPECT_LT(chm::deviation(t6), 1e-9);
    EXPECT_TRUE(chm::is_chm(t6));
}

TEST(Catalogue, B8bTwentiethRoots)
{
    const ComplexMatrix b = catalogue("B8b");
    EXPECT_TRUE(chm::is_chm(b));
    for (Eigen::Index j = 0; j < 8; ++j) {
        for (Eigen::Index k = 0; k < 8; ++k) {
            const double x = std::arg(b(j, k)) * 20.0 / (2.0 * pi);
            EXPECT_LT(std::abs(x - std::round(x)), 1e-10);
        }
    }
}

TEST(Catalogue, T9ConstraintResidual)
{
    const ComplexMatrix t9 = catalogue("T9");
    const cplx a = t9(1, 1), d = t9(1, 2), c = t9(1, 6), b = t9(1, 7);
    EXPECT_LT(std::abs(a - cplx(-0.3396, 0.9406)), 1e-3);
    const auto residual = chm::t9_constraints(a, b, c, d);
    ASSERT_EQ(residual.size(), 5U);
    for (const cplx& r : residual) {
        EXPECT_LT(std::abs(r), 1e-9);
    }
    EXPECT_TRUE(chm::is_chm(t9));
}

TEST(Catalogue, V8IsChm)
{
    const ComplexMatrix v8 = catalogue("V8");
    EXPECT_TRUE(chm::is_chm(v8));
    EXPECT_LT(chm::deviation(v8), 1e-9);
    const auto residual = chm::v8_constraints(v8(0, 6), v8(0, 2), v8(0, 4));
    for (const cplx& r : residual) {
        EXPECT_LT(std::abs(r), 1e-9);
    }
}

TEST(Catalogue, Names)
{
    const auto names = chm::catalogue_names();
    for (const char* expected : {"F", "T6", "T9", "B8a", "B8b", "V8"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
    }
}

TEST(Catalogue, Errors)
{
    EXPECT_EQ(kind_of([] { catalogue("H7"); }), ErrorKind::Input);
    EXPECT_THROW(catalogue("T6", {0.2}), Error);
    EXPECT_THROW(catalogue("T6", {1.6}), Error);
}
