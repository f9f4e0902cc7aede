#include "qmat/chm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "phase_lsq.hpp"

namespace qmat::chm {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

ComplexMatrix unimodularize(const ComplexMatrix& m)
{
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const cplx z = m.data()[i];
        const double r = std::abs(z);
        out.data()[i] = r > 0.0 ? z / r : cplx(1.0, 0.0);
    }
    return out;
}

ComplexMatrix from_core_phases(std::size_t n, const std::vector<double>& core)
{
    ComplexMatrix m = ComplexMatrix::Ones(n, n);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = 1; k < n; ++k) {
            m(j, k) = std::polar(1.0, core[(j - 1) * (n - 1) + (k - 1)]);
        }
    }
    return m;
}

Eigen::VectorXd gram_residual(const ComplexMatrix& h)
{
    const auto n = h.rows();
    const ComplexMatrix g = h * h.adjoint();
    Eigen::VectorXd r(n * (n - 1));
    Eigen::Index at = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            r(at++) = g(j, k).real();
            r(at++) = g(j, k).imag();
        }
    }
    return r;
}

std::vector<double> uniform_phases(std::size_t count, Rng& rng)
{
    std::uniform_real_distribution<double> phase(0.0, two_pi);
    std::vector<double> out(count);
    for (double& p : out) {
        p = phase(rng);
    }
    return out;
}

} // namespace

SearchOutcome sinkhorn_chm(std::size_t n, std::uint64_t seed, std::size_t max_iters,
                           const ToleranceConfig& tol)
{
    require(n >= 2, ErrorKind::Dimension, "sinkhorn_chm: N must be at least 2");
    tol.validate();
    Rng rng(seed);
    ComplexMatrix m = gaussian_matrix(n, n, rng);
    const double scale = std::sqrt(static_cast<double>(n));
    const double target = tol.convergence_tol * static_cast<double>(n);

    SearchOutcome out;
    out.best.deviation = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; it < max_iters; ++it) {
        ComplexMatrix e = unimodularize(m);
        const double z = deviation(e);
        out.iterations = it + 1;
        if (z < out.best.deviation) {
            out.best.matrix = e;
            out.best.deviation = z;
        }
        if (z <= target) {
            out.converged = true;
            return out;
        }
        m = scale * polar_unitary(e, tol);
    }
    std::ostringstream os;
    os << "no convergence after " << max_iters << " iterations, best deviation "
       << out.best.deviation;
    out.note = os.str();
    return out;
}

SearchOutcome random_walk_chm(std::size_t n, std::uint64_t seed, const WalkOptions& options,
                              const ToleranceConfig& tol)
{
    require(n >= 2, ErrorKind::Dimension, "random_walk_chm: N must be at least 2");
    tol.validate();
    const std::size_t core = n - 1;
    const bool has_mask = !options.fixed_mask.empty();
    if (has_mask) {
        require(options.fixed_mask.size() == core && options.fixed_phases.size() == core,
                ErrorKind::Dimension, "random_walk_chm: mask and phases must be (N-1)x(N-1)");
        for (std::size_t j = 0; j < core; ++j) {
            require(options.fixed_mask[j].size() == core && options.fixed_phases[j].size() == core,
                    ErrorKind::Dimension, "random_walk_chm: mask and phases must be (N-1)x(N-1)");
        }
    }
    require(options.initial_step > 0.0 && options.final_step > 0.0
                && options.final_step <= options.initial_step && options.cooling > 0.0
                && options.cooling < 1.0,
            ErrorKind::Contract, "random_walk_chm: invalid step schedule");

    auto is_fixed = [&](std::size_t j, std::size_t k) {
        return has_mask && options.fixed_mask[j][k];
    };

    // A move touches one core entry, or a mirrored pair when symmetry is imposed.
    std::vector<std::vector<std::size_t>> moves;
    for (std::size_t j = 0; j < core; ++j) {
        for (std::size_t k = options.symmetric ? j : 0; k < core; ++k) {
            if (is_fixed(j, k) || (options.symmetric && is_fixed(k, j))) {
                continue;
            }
            if (options.symmetric && j != k) {
                moves.push_back({j * core + k, k * core + j});
            } else {
                moves.push_back({j * core + k});
            }
        }
    }

    const double target = tol.convergence_tol * static_cast<double>(n);
    const std::size_t trials =
        options.trials_per_step > 0 ? options.trials_per_step : 50 * std::max<std::size_t>(moves.size(), 1);
    Rng rng(seed);
    SearchOutcome out;
    out.best.deviation = std::numeric_limits<double>::infinity();

    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(options.restarts, 1); ++attempt) {
        std::vector<double> phases = uniform_phases(core * core, rng);
        for (std::size_t j = 0; j < core; ++j) {
            for (std::size_t k = 0; k < core; ++k) {
                if (is_fixed(j, k)) {
                    phases[j * core + k] = options.fixed_phases[j][k];
                } else if (options.symmetric && k < j) {
                    phases[j * core + k] = phases[k * core + j];
                }
            }
        }
        double z = deviation(from_core_phases(n, phases));
        if (!moves.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
            std::bernoulli_distribution sign;
            for (double step = options.initial_step; step >= options.final_step * (1.0 - 1e-12)
                                                     && z > target;
                 step *= options.cooling) {
                std::size_t rejected = 0;
                for (std::size_t t = 0; t < trials && z > target; ++t) {
                    const auto& move = moves[pick(rng)];
                    const double delta = sign(rng) ? step : -step;
                    for (std::size_t idx : move) {
                        phases[idx] += delta;
                    }
                    const double zt = deviation(from_core_phases(n, phases));
                    ++out.iterations;
                    if (zt < z) {
                        z = zt;
                        rejected = 0;
                    } else {
                        for (std::size_t idx : move) {
                            phases[idx] -= delta;
                        }
                        // Both directions on every move failed: time to cool.
                        if (++rejected > 4 * moves.size()) {
                            break;
                        }
                    }
                }
            }
        }
        if (z < out.best.deviation) {
            out.best = HadamardCandidate::of(from_core_phases(n, phases));
        }
        if (is_chm(out.best.matrix, tol)) {
            out.converged = true;
            return out;
        }
    }
    std::ostringstream os;
    if (moves.empty()) {
        os << "infeasible pattern: all phases fixed, deviation " << out.best.deviation;
    } else {
        os << "walk ended at deviation " << out.best.deviation;
    }
    out.note = os.str();
    return out;
}

SearchOutcome circulant_chm_solve(std::size_t n, std::uint64_t seed, const ToleranceConfig& tol,
                                  std::size_t max_iters)
{
    require(n >= 3, ErrorKind::Dimension, "circulant_chm_solve: N must be at least 3");
    tol.validate();
    Rng rng(seed);
    auto row_of = [n](const std::vector<double>& ph) {
        std::vector<cplx> c(n);
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = std::polar(1.0, ph[j]);
        }
        return c;
    };
    // sum_j c_j / c_{(j+k) mod N} = 0 for k = 1..N-1.
    auto residual = [&](const std::vector<double>& ph) {
        const auto c = row_of(ph);
        Eigen::VectorXd r(2 * (n - 1));
        for (std::size_t k = 1; k < n; ++k) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s += c[j] / c[(j + k) % n];
            }
            r(2 * (k - 1)) = s.real();
            r(2 * (k - 1) + 1) = s.imag();
        }
        return r;
    };
    const auto fit = detail::solve_phases(residual, uniform_phases(n, rng), max_iters,
                                          tol.convergence_tol);
    SearchOutcome out;
    out.best = HadamardCandidate::of(circulant(row_of(fit.phases)));
    out.iterations = fit.iterations;
    out.converged = is_chm(out.best.matrix, tol);
    if (!out.converged) {
        std::ostringstream os;
        os << "stagnated with constraint residual " << fit.residual;
        out.note = os.str();
    }
    return out;
}

SearchOutcome solve_LN(std::size_t n, std::uint64_t seed, const ToleranceConfig& tol,
                       std::size_t max_iters)
{
    if (n < 3 || n % 4 != 3) {
        fail(ErrorKind::Unsupported, "solve_LN: N must be of the form 3 + 4k");
    }
    tol.validate();
    const std::size_t blocks = (n - 1) / 2;
    Rng rng(seed);
    auto values_of = [](const std::vector<double>& ph) {
        std::vector<cplx> v;
        v.reserve(ph.size());
        for (double p : ph) {
            v.push_back(std::polar(1.0, p));
        }
        return v;
    };
    auto residual = [&](const std::vector<double>& ph) {
        return gram_residual(build_LN(n, values_of(ph)));
    };
    const auto fit = detail::solve_phases(residual, uniform_phases(blocks, rng), max_iters,
                                          tol.convergence_tol);
    SearchOutcome out;
    out.best = HadamardCandidate::of(build_LN(n, values_of(fit.phases)));
    out.iterations = fit.iterations;
    out.converged = is_chm(out.best.matrix, tol);
    if (!out.converged) {
        std::ostringstream os;
        os << "stagnated with unitarity residual " << fit.residual;
        out.note = os.str();
    }
    return out;
}

} // namespace qmat::chm
