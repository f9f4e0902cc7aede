#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmat/numerics.hpp"

namespace qmat::ame {

struct BipartiteMatrix {
    std::size_t d = 0;
    ComplexMatrix M;

    // Checks that M has order d^2.
    static BipartiteMatrix make(ComplexMatrix m, std::size_t d);
    // Infers d from the order, which must be a perfect square.
    static BipartiteMatrix infer(ComplexMatrix m);
};

enum class Realignment { R, Gamma, T };

struct EpGtPoint {
    double e_p = 0.0;
    double g_t = 0.0;
};

enum class MapOutcome { TwoUnitary, AttractorQ, Exhausted };
const char* to_string(MapOutcome outcome);

struct MapRunRecord {
    std::size_t iterations = 0;
    std::vector<EpGtPoint> trajectory;
    MapOutcome outcome = MapOutcome::Exhausted;
    BipartiteMatrix final;
    std::string note;
};

struct SampleStats {
    double mean = 0.0;
    double stddev = 0.0;
};

// R: U_jklm -> U_jlkm, Gamma: U_jklm -> U_jmlk, T: full transpose.
BipartiteMatrix realign(const BipartiteMatrix& b, Realignment kind);
ComplexMatrix realign(const ComplexMatrix& m, std::size_t d, Realignment kind);

double linear_entropy(const ComplexMatrix& m);
double linear_entropy(const BipartiteMatrix& b);

BipartiteMatrix swap(std::size_t d);

double entangling_power(const BipartiteMatrix& b);
double gate_typicality(const BipartiteMatrix& b);
EpGtPoint ep_gt(const BipartiteMatrix& b);

bool is_two_unitary(const BipartiteMatrix& b, double tol = 1e-10);

BipartiteMatrix permutation_P36();
BipartiteMatrix ame43();

BipartiteMatrix build_Q(double w1, double w2);
BipartiteMatrix build_V(const std::vector<double>& w);
BipartiteMatrix build_W(const std::vector<double>& w);
// The printed optimal phase vectors for V and W.
std::vector<double> v_star_phases();
std::vector<double> w_star_phases();

// Y = (X + Gamma(R(X)) + R(Gamma(X))) / 3.
BipartiteMatrix iso_map(const BipartiteMatrix& x);
SampleStats iso_random_stats(std::size_t d, std::size_t n, std::uint64_t seed);

// P exp(i (eps/2) (G + G^T)) with a real Gaussian G.
BipartiteMatrix seed_m0(const BipartiteMatrix& p, double eps, std::uint64_t seed);

struct MapOptions {
    std::size_t max_iters = 10000;
    // Success needs |1 - e_p| <= tol and is_two_unitary at tol.
    double tol = 1e-10;
    std::size_t attractor_window = 50;
    double attractor_band = 1e-6;
};

// Iterates M -> polar(Gamma(R(M))).
MapRunRecord dynamical_map_run(const BipartiteMatrix& m0, const MapOptions& options = {});

BipartiteMatrix golden_ame();
// a, b, c of the golden construction.
struct GoldenConstants {
    double a;
    double b;
    double c;
};
GoldenConstants golden_constants();

std::vector<EpGtPoint> ep_gt_sample(std::size_t d, std::size_t n, std::uint64_t seed);

bool is_permutation_matrix(const ComplexMatrix& m);

} // namespace qmat::ame
