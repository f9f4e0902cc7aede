#include "qmat/ame.hpp"

#include <cmath>

namespace qmat::ame {

const char* to_string(MapOutcome outcome)
{
    switch (outcome) {
    case MapOutcome::TwoUnitary: return "two_unitary";
    case MapOutcome::AttractorQ: return "attractor_Q";
    case MapOutcome::Exhausted: return "exhausted";
    }
    return "unknown";
}

SampleStats iso_random_stats(std::size_t d, std::size_t n, std::uint64_t seed)
{
    require(d >= 2, ErrorKind::Dimension, "iso_random_stats: d must be at least 2");
    require(n >= 1, ErrorKind::Contract, "iso_random_stats: need at least one sample");
    Rng rng(seed);
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix x = gaussian_real_matrix(d * d, d * d, rng).cast<cplx>();
        values.push_back(linear_entropy(iso_map({d, x})));
    }
    SampleStats stats;
    for (double v : values) {
        stats.mean += v;
    }
    stats.mean /= static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - stats.mean) * (v - stats.mean);
        }
        stats.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return stats;
}

BipartiteMatrix seed_m0(const BipartiteMatrix& p, double eps, std::uint64_t seed)
{
    require(is_permutation_matrix(p.M), ErrorKind::Contract, "seed_m0: seed is not a permutation");
    require(eps >= 0.0 && std::isfinite(eps), ErrorKind::Contract, "seed_m0: eps must be >= 0");
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(p.M.rows());
    const RealMatrix g = gaussian_real_matrix(n, n, rng);
    const ComplexMatrix h = (0.5 * eps * (g + g.transpose())).cast<cplx>();
    return {p.d, p.M * matrix_exponential_hermitian(h)};
}

MapRunRecord dynamical_map_run(const BipartiteMatrix& m0, const MapOptions& options)
{
    const double n = static_cast<double>(m0.M.rows());
    require(is_unitary(m0.M, 1e-8 * n), ErrorKind::Contract,
            "dynamical_map_run: seed is not unitary");
    constexpr double q_star = 419.0 / 420.0;
    MapRunRecord record;
    record.final = m0;
    std::size_t in_band = 0;
    for (std::size_t it = 0;; ++it) {
        const EpGtPoint point = ep_gt(record.final);
        record.trajectory.push_back(point);
        record.iterations = it;
        if (std::abs(1.0 - point.e_p) <= options.tol && is_two_unitary(record.final, options.tol)) {
            record.outcome = MapOutcome::TwoUnitary;
            return record;
        }
        in_band = std::abs(point.e_p - q_star) < options.attractor_band ? in_band + 1 : 0;
        if (in_band >= options.attractor_window) {
            record.outcome = MapOutcome::AttractorQ;
            return record;
        }
        if (it >= options.max_iters) {
            break;
        }
        const ComplexMatrix next = realign(realign(record.final.M, m0.d, Realignment::R), m0.d,
                                           Realignment::Gamma);
        try {
            record.final.M = polar_unitary(next);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Singular) {
                throw;
            }
            record.note = "realigned iterate is singular; the polar projection is undefined";
            break;
        }
    }
    record.outcome = MapOutcome::Exhausted;
    return record;
}

std::vector<EpGtPoint> ep_gt_sample(std::size_t d, std::size_t n, std::uint64_t seed)
{
    require(d >= 2, ErrorKind::Dimension, "ep_gt_sample: d must be at least 2");
    require(n >= 1, ErrorKind::Contract, "ep_gt_sample: need at least one sample");
    Rng rng(seed);
    std::vector<EpGtPoint> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back(ep_gt({d, haar_unitary(d * d, rng)}));
    }
    return points;
}

} // namespace qmat::ame
