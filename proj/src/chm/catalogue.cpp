#include "qmat/chm.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "phase_lsq.hpp"

namespace qmat::chm {

namespace {

// Exponents of exp(i pi / 10 * R); the bordered zeros are included.
constexpr std::array<std::array<int, 8>, 8> b8a_table{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 5, 10, 13, 8, 3, 15, 18},
    {0, 10, 5, 18, 3, 13, 15, 8},
    {0, 12, 7, 10, 15, 17, 5, 2},
    {0, 17, 2, 15, 10, 7, 5, 12},
    {0, 7, 17, 3, 13, 0, 10, 10},
    {0, 2, 12, 8, 18, 10, 0, 10},
    {0, 15, 15, 5, 5, 10, 10, 0},
}};

constexpr std::array<std::array<int, 8>, 8> b8b_table{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 8, 10, 13, 5, 3, 15, 18},
    {0, 18, 10, 3, 5, 13, 15, 8},
    {0, 12, 10, 7, 15, 17, 5, 2},
    {0, 2, 10, 17, 15, 7, 5, 12},
    {0, 10, 0, 0, 10, 0, 10, 10},
    {0, 10, 0, 10, 0, 10, 0, 10},
    {0, 0, 0, 10, 10, 10, 10, 0},
}};

ComplexMatrix butson8(const std::array<std::array<int, 8>, 8>& table)
{
    ComplexMatrix m(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t k = 0; k < 8; ++k) {
            const int e = table[j][k] % 20;
            m(j, k) = std::polar(1.0, std::numbers::pi * e / 10.0);
        }
    }
    return m;
}

Eigen::VectorXd split(const std::vector<cplx>& eqs)
{
    Eigen::VectorXd r(2 * eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        r(2 * i) = eqs[i].real();
        r(2 * i + 1) = eqs[i].imag();
    }
    return r;
}

std::vector<double> args_of(std::initializer_list<cplx> values)
{
    std::vector<double> out;
    for (cplx v : values) {
        out.push_back(std::arg(v));
    }
    return out;
}

double polish_target() { return 1e-14; }

ComplexMatrix polished_t9()
{
    auto residual = [](const std::vector<double>& p) {
        return split(t9_constraints(std::polar(1.0, p[0]), std::polar(1.0, p[1]),
                                    std::polar(1.0, p[2]), std::polar(1.0, p[3])));
    };
    const auto start = args_of({{-0.3396, 0.9406}, {-0.9635, 0.2676}, {-0.0365, 0.9993},
                                {0.8396, 0.5432}});
    const auto fit = detail::solve_phases(residual, start, 200, polish_target());
    return t9_matrix(std::polar(1.0, fit.phases[0]), std::polar(1.0, fit.phases[1]),
                     std::polar(1.0, fit.phases[2]), std::polar(1.0, fit.phases[3]));
}

ComplexMatrix polished_v8()
{
    auto residual = [](const std::vector<double>& p) {
        return split(v8_constraints(std::polar(1.0, p[0]), std::polar(1.0, p[1]),
                                    std::polar(1.0, p[2])));
    };
    const auto start = args_of({{-0.6509, -0.7592}, {-0.7799, 0.6258}, {0.6183, -0.7859}});
    const auto fit = detail::solve_phases(residual, start, 200, polish_target());
    return v8_matrix(std::polar(1.0, fit.phases[0]), std::polar(1.0, fit.phases[1]),
                     std::polar(1.0, fit.phases[2]));
}

double single_param(const std::string& name, const std::vector<double>& params)
{
    require(params.size() == 1, ErrorKind::Contract,
            "catalogue: " + name + " takes exactly one parameter");
    require(std::isfinite(params[0]), ErrorKind::Input, "catalogue: non-finite parameter");
    return params[0];
}

} // namespace

std::vector<std::string> catalogue_names() { return {"F", "T6", "T9", "B8a", "B8b", "V8"}; }

ComplexMatrix catalogue(const std::string& name, const std::vector<double>& params)
{
    if (name == "F") {
        const double n = single_param(name, params);
        require(n >= 1.0 && n == std::floor(n), ErrorKind::Contract,
                "catalogue: F needs a positive integer order");
        return fourier(static_cast<std::size_t>(n));
    }
    if (name == "T6") {
        return t6_matrix(single_param(name, params));
    }
    require(params.empty(), ErrorKind::Contract, "catalogue: " + name + " takes no parameters");
    if (name == "T9") {
        return polished_t9();
    }
    if (name == "V8") {
        return polished_v8();
    }
    if (name == "B8a") {
        return butson8(b8a_table);
    }
    if (name == "B8b") {
        return butson8(b8b_table);
    }
    fail(ErrorKind::Input, "catalogue: unknown matrix '" + name + "'");
}

} // namespace qmat::chm
