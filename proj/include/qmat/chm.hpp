#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmat/numerics.hpp"

namespace qmat::chm {

// Z(M) = ||M M^dagger - N I||_F.
double deviation(const ComplexMatrix& m);

struct HadamardCandidate {
    ComplexMatrix matrix;
    double deviation = 0.0;

    static HadamardCandidate of(ComplexMatrix m);
};

struct SearchOutcome {
    bool converged = false;
    HadamardCandidate best;
    std::size_t iterations = 0;
    std::string note;
};

struct ButsonReport {
    bool is_butson = false;
    std::optional<int> q;
    // Largest lattice distance at the reported q, or at q_max when none fits.
    double max_phase_residual = 0.0;
};

struct HaagerupCard {
    std::size_t cardinality = 0;
    double cluster_tol = 0.0;
};

struct UnitaryDefectReport {
    std::size_t equations = 0;
    std::size_t variables = 0;
    std::size_t rank = 0;
    std::size_t solution_dim = 0;
    int defect = 0;
    std::vector<double> singular_values;
};

ComplexMatrix fourier(std::size_t n);
bool is_chm(const ComplexMatrix& m, const ToleranceConfig& tol = {});
ComplexMatrix dephase(const ComplexMatrix& m);

SearchOutcome sinkhorn_chm(std::size_t n, std::uint64_t seed, std::size_t max_iters,
                           const ToleranceConfig& tol = {});

struct WalkOptions {
    // Core-indexed (N-1)x(N-1); empty means nothing is fixed.
    std::vector<std::vector<bool>> fixed_mask;
    std::vector<std::vector<double>> fixed_phases;
    bool symmetric = false;
    double initial_step = 0.5;
    double final_step = 1e-12;
    double cooling = 0.5;
    std::size_t trials_per_step = 0; // 0 picks a size-dependent default
    std::size_t restarts = 1;
};

SearchOutcome random_walk_chm(std::size_t n, std::uint64_t seed, const WalkOptions& options,
                              const ToleranceConfig& tol = {});

HaagerupCard haagerup_card(const ComplexMatrix& h, const ToleranceConfig& tol = {});
ButsonReport butson_fit(const ComplexMatrix& h, int q_max, const ToleranceConfig& tol = {});

SearchOutcome circulant_chm_solve(std::size_t n, std::uint64_t seed,
                                  const ToleranceConfig& tol = {}, std::size_t max_iters = 2000);
ComplexMatrix circulant(const std::vector<cplx>& first_row);

ComplexMatrix build_LN(std::size_t n, const std::vector<cplx>& block_values);
// Solves the unitarity constraints restricted to the L_N pattern.
SearchOutcome solve_LN(std::size_t n, std::uint64_t seed, const ToleranceConfig& tol = {},
                       std::size_t max_iters = 2000);

UnitaryDefectReport unitary_defect(const ComplexMatrix& u, const ToleranceConfig& tol = {});

// Names: F (param N), T6 (param gamma), T9, B8a, B8b, V8.
ComplexMatrix catalogue(const std::string& name, const std::vector<double>& params = {});
std::vector<std::string> catalogue_names();

// Residuals of the published constraint systems (all complex equations).
std::vector<cplx> t9_constraints(cplx a, cplx b, cplx c, cplx d);
std::vector<cplx> v8_constraints(cplx a, cplx b, cplx c);
ComplexMatrix t9_matrix(cplx a, cplx b, cplx c, cplx d);
ComplexMatrix v8_matrix(cplx a, cplx b, cplx c);
ComplexMatrix t6_matrix(double gamma);

} // namespace qmat::chm
