#include "qmat/ame.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qmat::ame {

namespace {

// Column j of P36 carries its single one in row image[j] - 1.
constexpr std::array<int, 36> p36_image{1, 15, 8, 29, 36, 22, 16, 2, 30, 7, 21, 35,
                                        23, 31, 3, 18, 10, 26, 32, 24, 17, 4, 25, 9,
                                        12, 28, 33, 20, 5, 13, 27, 11, 19, 34, 14, 6};

constexpr std::array<int, 9> ame43_image{3, 7, 5, 4, 2, 9, 8, 6, 1};

// Blocks B1, B2, B3 of the golden matrix, twelve lines each. A token xk stands for
// x * omega^k with omega = exp(i pi / 10); a dot is a zero.
constexpr const char* golden_blocks = R"(
. . c19 . . . b18 . . . . a6
. c9 . . . . . a3 b0 . . .
. . . c7 c15 . . . . b13 b14 .
. . . b2 b14 . . . . c2 c19 .
. b5 . . . a19 . . c6 . . .
a19 . b17 . . . c6 . . . . .
a0 . b8 . . . c17 . . . . .
. b6 . . . a10 . . c7 . . .
. . . b16 b12 . . . . c12 c1 .
. . . c1 c1 . . . . b11 b16 .
. c12 . . . . . a16 b3 . . .
. . c16 . . . b15 . . . . a13
. . b0 . . . . a13 c16 . . .
b18 . . . c1 a14 . . . . . .
. . . a15 . . . . . b1 . c3
. . . . . . a18 . . c2 . b14
c8 a14 . . b1 . . . . . . .
. . c0 . . . . . b6 . a0 .
. . c11 . . . . . b17 . a1 .
c1 a17 . . b14 . . . . . . .
. . . . . . a6 . . c0 . b12
. . . a15 . . . . . b11 . c13
b1 . . . c4 a7 . . . . . .
. . b1 . . . . a4 c17 . . .
b4 . . . . . a8 . . c14 . .
. . a14 . . . . b6 . . . c17
. b6 . . c16 . . . a0 . . .
. c19 . . b19 . . . . . a15 .
. . . . . a1 . c8 . . . b9
c0 . . a14 . . . . . b0 . .
c2 . . a6 . . . . . b2 . .
. . . . . a19 . c16 . . . b17
. c12 . . b12 . . . . . a18 .
. b15 . . c5 . . . a19 . . .
. . a6 . . . . b8 . . . c19
b8 . . . . . a2 . . c18 . .
)";

ComplexMatrix permutation_from_image(const int* image, std::size_t n)
{
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        p(image[j] - 1, j) = 1.0;
    }
    return p;
}

ComplexMatrix rotation(double w)
{
    ComplexMatrix r(2, 2);
    r << std::cos(w), -std::sin(w), std::sin(w), std::cos(w);
    return r;
}

void require_arity(const std::vector<double>& w, std::size_t n, const char* what)
{
    if (w.size() != n) {
        std::ostringstream os;
        os << what << ": expected " << n << " phases, got " << w.size();
        fail(ErrorKind::Contract, os.str());
    }
    for (double x : w) {
        require(std::isfinite(x), ErrorKind::Input, std::string(what) + ": non-finite phase");
    }
}

} // namespace

BipartiteMatrix permutation_P36()
{
    return {6, permutation_from_image(p36_image.data(), p36_image.size())};
}

BipartiteMatrix ame43()
{
    return {3, permutation_from_image(ame43_image.data(), ame43_image.size())};
}

BipartiteMatrix build_Q(double w1, double w2)
{
    require_arity({w1, w2}, 2, "build_Q");
    ComplexMatrix q0 = ComplexMatrix::Identity(36, 36);
    q0.block(2, 2, 2, 2) = rotation(w1);
    q0.block(32, 32, 2, 2) = rotation(w2);
    return {6, q0 * permutation_P36().M};
}

BipartiteMatrix build_V(const std::vector<double>& w)
{
    require_arity(w, 18, "build_V");
    ComplexMatrix v0 = ComplexMatrix::Zero(36, 36);
    for (std::size_t j = 0; j < 18; ++j) {
        v0.block(2 * j, 2 * j, 2, 2) = rotation(w[j]);
    }
    return {6, v0 * permutation_P36().M};
}

BipartiteMatrix build_W(const std::vector<double>& w)
{
    require_arity(w, 6, "build_W");
    ComplexMatrix w0 = ComplexMatrix::Identity(36, 36);
    for (std::size_t j = 0; j < 6; ++j) {
        w0.block(6 * j + 2, 6 * j + 2, 2, 2) = rotation(w[j]);
    }
    return {6, w0 * permutation_P36().M};
}

std::vector<double> v_star_phases()
{
    const std::array<double, 18> fractions{1.0 / 5,  5.0 / 6, 1.0 / 4, 6.0 / 5,  3.0 / 4,
                                           1.0 / 4,  6.0 / 5, 7.0 / 12, 5.0 / 4, 6.0 / 5,
                                           5.0 / 3,  5.0 / 4, 6.0 / 5, 3.0 / 2,  5.0 / 4,
                                           6.0 / 5, 17.0 / 12, 5.0 / 4};
    std::vector<double> w;
    for (double f : fractions) {
        w.push_back(std::numbers::pi * f);
    }
    return w;
}

std::vector<double> w_star_phases()
{
    const std::array<double, 6> fractions{5.0 / 6, 23.0 / 12, 1.0 / 12, 0.0, 7.0 / 6, 5.0 / 4};
    std::vector<double> w;
    for (double f : fractions) {
        w.push_back(std::numbers::pi * f);
    }
    return w;
}

GoldenConstants golden_constants()
{
    const double s5 = std::sqrt(5.0);
    return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(5.0 + s5), std::sqrt(5.0 + s5) / (2.0 * s5)};
}

BipartiteMatrix golden_ame()
{
    const auto k = golden_constants();
    ComplexMatrix b = ComplexMatrix::Zero(36, 36);
    std::istringstream in(golden_blocks);
    std::string token;
    for (std::size_t cell = 0; in >> token; ++cell) {
        const std::size_t line = cell / 12;
        const std::size_t j = cell % 12;
        if (token == ".") {
            continue;
        }
        const double modulus = token[0] == 'a' ? k.a : token[0] == 'b' ? k.b : k.c;
        const int power = std::stoi(token.substr(1));
        b(line, (line / 12) * 12 + j) = std::polar(modulus, std::numbers::pi * power / 10.0);
    }
    return {6, b * permutation_P36().M.transpose()};
}

} // namespace qmat::ame
