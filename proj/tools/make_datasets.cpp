// Regenerates the bundled vector sets in data/ and their manifest.
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "qmat/cli.hpp"
#include "qmat/defect.hpp"

namespace {

using qmat::ComplexVector;
using qmat::cplx;
using Poly = std::vector<int>;

// Arithmetic in GF(p^n) = GF(p)[x] / irr, elements as coefficient vectors (low to high).
struct GaloisField {
    int p;
    int n;
    Poly irr;

    Poly mul(const Poly& a, const Poly& b) const
    {
        std::vector<int> r(2 * n - 1, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
            }
        }
        for (int k = 2 * n - 2; k >= n; --k) {
            const int c = r[k];
            if (c == 0) {
                continue;
            }
            for (int t = 0; t <= n; ++t) {
                r[k - n + t] = ((r[k - n + t] - c * irr[t]) % p + p) % p;
            }
        }
        r.resize(n);
        return r;
    }

    Poly power(const Poly& x, int e) const
    {
        Poly r = x;
        for (int i = 1; i < e; ++i) {
            r = mul(r, x);
        }
        return r;
    }

    // Absolute trace: sum of the Frobenius images, which lands in GF(p).
    int trace(const Poly& a) const
    {
        Poly s(n, 0);
        Poly x = a;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                s[i] = (s[i] + x[i]) % p;
            }
            x = power(x, p);
        }
        for (int i = 1; i < n; ++i) {
            if (s[i] != 0) {
                throw std::runtime_error("trace left the prime field; polynomial is not irreducible");
            }
        }
        return s[0];
    }

    std::vector<Poly> elements() const
    {
        std::vector<Poly> out;
        const int count = static_cast<int>(std::pow(p, n));
        for (int idx = 0; idx < count; ++idx) {
            Poly e(n);
            int v = idx;
            for (int i = n - 1; i >= 0; --i) {
                e[i] = v % p;
                v /= p;
            }
            out.push_back(e);
        }
        return out;
    }
};

// Complete set of d + 1 MUB for d = p^n: the computational basis plus one basis per field element.
std::vector<ComplexVector> full_mub(const GaloisField& f)
{
    const auto elems = f.elements();
    const auto d = elems.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexVector> vectors;
    for (std::size_t k = 0; k < d; ++k) {
        ComplexVector v = ComplexVector::Zero(d);
        v(k) = 1.0;
        vectors.push_back(v);
    }
    std::vector<Poly> unit(f.n, Poly(f.n, 0));
    for (int i = 0; i < f.n; ++i) {
        unit[i][i] = 1;
    }
    for (const auto& a : elems) {
        std::vector<std::vector<int>> s(f.n, std::vector<int>(f.n));
        for (int i = 0; i < f.n; ++i) {
            for (int j = 0; j < f.n; ++j) {
                s[i][j] = f.trace(f.mul(a, f.mul(unit[i], unit[j])));
            }
        }
        for (const auto& b : elems) {
            ComplexVector v(d);
            for (std::size_t xi = 0; xi < d; ++xi) {
                const auto& x = elems[xi];
                long quad = 0;
                long lin = 0;
                for (int i = 0; i < f.n; ++i) {
                    lin += static_cast<long>(b[i]) * x[i];
                    for (int j = 0; j < f.n; ++j) {
                        quad += static_cast<long>(x[i]) * s[i][j] * x[j];
                    }
                }
                double turns;
                if (f.p == 2) {
                    // i^(x S x) (-1)^(b.x)
                    turns = static_cast<double>(quad % 4) / 4.0 + static_cast<double>(lin % 2) / 2.0;
                } else {
                    const long half = (f.p + 1) / 2;
                    turns = static_cast<double>((quad * half + lin) % f.p) / f.p;
                }
                const long quarter = std::lround(turns * 4.0);
                if (f.p == 2 && std::abs(turns * 4.0 - quarter) < 1e-12) {
                    static const cplx units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                    v(xi) = norm * units[quarter % 4];
                } else {
                    v(xi) = std::polar(norm, 2.0 * std::numbers::pi * turns);
                }
            }
            vectors.push_back(v);
        }
    }
    return vectors;
}

std::vector<ComplexVector> real_vectors(const std::vector<std::vector<int>>& rows)
{
    std::vector<ComplexVector> out;
    for (const auto& r : rows) {
        ComplexVector v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            v(i) = static_cast<double>(r[i]);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<ComplexVector> ks13()
{
    return real_vectors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, -1}, {1, 0, 1}, {1, 0, -1},
                         {1, 1, 0}, {1, -1, 0}, {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}});
}

std::vector<ComplexVector> ks18()
{
    return real_vectors({{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}, {0, 1, 0, 0},
                         {1, 0, 1, 0}, {1, 0, -1, 0}, {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},
                         {1, 1, 1, 1}, {0, 1, 0, -1}, {1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0},
                         {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}});
}

// Six basis vectors plus fifteen vectors with entries omega^k / 2 (omega = e^{2 pi i/3}),
// vanishing at the listed pair of positions; -1 marks a zero.
std::vector<ComplexVector> ks21()
{
    std::vector<ComplexVector> out;
    for (int k = 0; k < 6; ++k) {
        ComplexVector v = ComplexVector::Zero(6);
        v(k) = 1.0;
        out.push_back(v);
    }
    const std::vector<std::vector<int>> exps{
        {-1, -1, 0, 0, 0, 0}, {-1, 0, -1, 0, 1, 2}, {-1, 0, 0, -1, 2, 1}, {-1, 0, 1, 2, -1, 0},
        {-1, 0, 2, 1, 0, -1}, {0, -1, -1, 0, 2, 1}, {0, -1, 0, -1, 1, 2}, {0, -1, 2, 1, -1, 0},
        {0, -1, 1, 2, 0, -1}, {0, 0, -1, -1, 0, 0}, {0, 1, -1, 2, -1, 2}, {0, 2, -1, 1, 1, -1},
        {0, 2, 1, -1, -1, 1}, {0, 1, 2, -1, 2, -1}, {0, 0, 0, 0, -1, -1}};
    for (const auto& row : exps) {
        ComplexVector v(6);
        for (int i = 0; i < 6; ++i) {
            v(i) = row[i] < 0 ? cplx(0.0) : std::polar(0.5, 2.0 * std::numbers::pi * row[i] / 3.0);
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    namespace fs = std::filesystem;
    const std::string dir = argc > 1 ? argv[1] : QMAT_DATA_DIR;
    fs::create_directories(dir);
    struct Item {
        std::string name;
        std::size_t d;
        std::vector<ComplexVector> vectors;
    };
    std::vector<Item> items{
        {"ks13_d3", 3, ks13()},
        {"ks18_d4", 4, ks18()},
        {"ks21_d6", 6, ks21()},
        {"mub_d4", 4, full_mub({2, 2, {1, 1, 1}})},
        {"mub_d8", 8, full_mub({2, 3, {1, 1, 0, 1}})},
        {"mub_d9", 9, full_mub({3, 2, {1, 0, 1}})},
        {"mub_d16", 16, full_mub({2, 4, {1, 1, 0, 0, 1}})},
        {"sic_d3", 3, qmat::defect::sic_d3(std::numbers::pi).vectors},
    };
    std::vector<qmat::cli::DatasetEntry> entries;
    for (auto& item : items) {
        const auto set = qmat::defect::POVMSet::make(item.d, std::move(item.vectors));
        const std::string file = item.name + ".json";
        const std::string path = (fs::path(dir) / file).string();
        qmat::defect::dataset_save(set, path);
        entries.push_back({item.name, file, set.d, set.size(), qmat::cli::sha256_file(path), "ok"});
        std::cout << item.name << ": " << set.size() << " vectors in d = " << set.d << "\n";
    }
    qmat::cli::write_manifest(dir, entries);
    return 0;
}
