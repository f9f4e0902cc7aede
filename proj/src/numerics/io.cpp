#include "qmat/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qmat {

json matrix_to_json(const ComplexMatrix& m)
{
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            data.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const json& j)
{
    require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data"),
            ErrorKind::Input, "matrix JSON needs rows, cols and data");
    const auto rows = j.at("rows").get<long long>();
    const auto cols = j.at("cols").get<long long>();
    const json& data = j.at("data");
    require(rows > 0 && cols > 0, ErrorKind::Dimension, "matrix JSON: rows and cols must be positive");
    require(data.is_array() && static_cast<long long>(data.size()) == rows * cols,
            ErrorKind::Input, "matrix JSON: data length differs from rows*cols");
    ComplexMatrix m(rows, cols);
    for (long long k = 0; k < rows * cols; ++k) {
        const json& e = data[k];
        cplx z;
        if (e.is_number()) {
            z = e.get<double>();
        } else {
            require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(),
                    ErrorKind::Input, "matrix JSON: entries must be [re, im] pairs");
            z = cplx(e[0].get<double>(), e[1].get<double>());
        }
        m(k / cols, k % cols) = z;
    }
    require_finite(m, "matrix JSON");
    return m;
}

namespace {

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& token)
{
    if (s.empty() || s == "+") {
        return 1.0;
    }
    if (s == "-") {
        return -1.0;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::Input, "cannot parse complex entry '" + token + "'");
    }
    require(used == s.size(), ErrorKind::Input, "cannot parse complex entry '" + token + "'");
    return v;
}

} // namespace

cplx parse_complex_token(const std::string& token)
{
    require(!token.empty(), ErrorKind::Input, "empty complex entry");
    const char last = token.back();
    if (last != 'j' && last != 'i') {
        return {parse_double(token, token), 0.0};
    }
    const std::string body = token.substr(0, token.size() - 1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, parse_double(body, token)};
    }
    return {parse_double(body.substr(0, split), token), parse_double(body.substr(split), token)};
}

std::string matrix_to_text(const ComplexMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double im = m(i, j).imag();
            os << (j ? " " : "") << format_double(m(i, j).real()) << (std::signbit(im) ? "-" : "+")
               << format_double(std::abs(im)) << "j";
        }
        os << "\n";
    }
    return os.str();
}

ComplexMatrix matrix_from_text(const std::string& text)
{
    std::vector<std::vector<cplx>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::vector<cplx> row;
        std::string tok;
        while (tokens >> tok) {
            row.push_back(parse_complex_token(tok));
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    require(!rows.empty(), ErrorKind::Input, "text matrix: no rows");
    const std::size_t cols = rows.front().size();
    ComplexMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, ErrorKind::Input, "text matrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    require_finite(m, "text matrix");
    return m;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::Input, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::Input, "cannot write '" + path + "'");
    out << contents;
}

ComplexMatrix read_matrix(const std::string& path)
{
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    require(first != std::string::npos, ErrorKind::Input, "'" + path + "' is empty");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            fail(ErrorKind::Input, "'" + path + "': " + e.what());
        }
        return matrix_from_json(j);
    }
    return matrix_from_text(text);
}

void write_matrix(const std::string& path, const ComplexMatrix& m)
{
    write_file(path, matrix_to_json(m).dump() + "\n");
}

} // namespace qmat
