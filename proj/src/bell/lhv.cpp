#include "qmat/bell.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace qmat::bell {

namespace {

constexpr std::size_t max_columns = 24;

void require_enumerable(std::size_t n, const char* what)
{
    if (n > max_columns) {
        std::ostringstream os;
        os << what << ": " << n << " columns exceed the enumeration limit of " << max_columns;
        fail(ErrorKind::Capacity, os.str());
    }
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

LhvResult lhv_value(const RealMatrix& core)
{
    require(core.rows() > 0 && core.cols() > 0, ErrorKind::Dimension, "lhv_value: empty core");
    require(core.allFinite(), ErrorKind::Input, "lhv_value: non-finite entry");
    const auto n = static_cast<std::size_t>(core.cols());
    require_enumerable(n, "lhv_value");

    // x and -x give the same norm, so x_0 stays +1 and the Gray code runs over the rest.
    std::vector<int> x(n, 1);
    Eigen::VectorXd v = core.rowwise().sum();
    LhvResult best{v.cwiseAbs().sum(), x};
    const double scale = std::max(1.0, core.cwiseAbs().sum());
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i)) + 1;
        v -= (2.0 * x[bit]) * core.col(static_cast<Eigen::Index>(bit));
        x[bit] = -x[bit];
        const double value = v.cwiseAbs().sum();
        if (value > best.value + 1e-12 * scale) {
            best.value = value;
            best.assignment = x;
        } else if (value >= best.value - 1e-12 * scale && lex_less(x, best.assignment)) {
            best.assignment = x;
        }
    }
    // Recompute from scratch to drop the accumulated update error.
    Eigen::VectorXd xv(n);
    for (std::size_t k = 0; k < n; ++k) {
        xv(k) = best.assignment[k];
    }
    best.value = (core * xv).cwiseAbs().sum();
    return best;
}

std::vector<std::vector<int>> unbiased_vectors(const RealMatrix& h)
{
    require(h.rows() > 0 && h.cols() > 0, ErrorKind::Dimension, "unbiased_vectors: empty matrix");
    const auto n = static_cast<std::size_t>(h.cols());
    require_enumerable(n, "unbiased_vectors");
    Eigen::MatrixXi hi(h.rows(), h.cols());
    for (Eigen::Index j = 0; j < h.rows(); ++j) {
        for (Eigen::Index k = 0; k < h.cols(); ++k) {
            require(h(j, k) == 1.0 || h(j, k) == -1.0, ErrorKind::Contract,
                    "unbiased_vectors: entries must be +1 or -1");
            hi(j, k) = static_cast<int>(h(j, k));
        }
    }
    std::vector<std::vector<int>> found;
    const auto root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    if (root * root != static_cast<long>(n)) {
        return found;
    }
    std::vector<int> x(n, 1);
    Eigen::VectorXi v = hi.rowwise().sum();
    auto check = [&] {
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            if (std::abs(static_cast<long>(v(j))) != root) {
                return;
            }
        }
        found.push_back(x);
    };
    check();
    const std::uint64_t steps = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        v -= (2 * x[bit]) * hi.col(static_cast<Eigen::Index>(bit));
        x[bit] = -x[bit];
        check();
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace qmat::bell
