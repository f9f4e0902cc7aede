#pragma once

#include <string>

#include "json.hpp"
#include "qmat/numerics.hpp"

namespace qmat {

using json = nlohmann::json;

// {"rows": n, "cols": m, "data": [[re, im], ...]} in row-major order.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// One row per line, entries written as re+imj and separated by whitespace.
std::string matrix_to_text(const ComplexMatrix& m);
ComplexMatrix matrix_from_text(const std::string& text);
cplx parse_complex_token(const std::string& token);

// Reads either format; JSON is recognised by a leading '{'.
ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace qmat
