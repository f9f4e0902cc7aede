#include "qmat/defect.hpp"

#include <cmath>

#include "qmat/io.hpp"

namespace qmat::defect {

namespace {

cplx entry_from_json(const json& e)
{
    if (e.is_number()) {
        return {e.get<double>(), 0.0};
    }
    require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(),
            ErrorKind::Input, "dataset: components must be numbers or [re, im] pairs");
    return {e[0].get<double>(), e[1].get<double>()};
}

} // namespace

POVMSet dataset_load(const std::string& path)
{
    const std::string text = read_file(path);
    require(!text.empty(), ErrorKind::Input, "dataset_load: empty file " + path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Input, "dataset_load: malformed JSON in " + path + ": " + e.what());
    }
    require(doc.is_object() && doc.contains("d") && doc.contains("vectors"), ErrorKind::Input,
            "dataset_load: expected keys 'd' and 'vectors'");
    require(doc["d"].is_number_unsigned() && doc["vectors"].is_array(), ErrorKind::Input,
            "dataset_load: 'd' must be a count and 'vectors' an array");
    const auto d = doc["d"].get<std::size_t>();
    std::vector<ComplexVector> vectors;
    for (const auto& jv : doc["vectors"]) {
        require(jv.is_array() && jv.size() == d, ErrorKind::Dimension,
                "dataset_load: vector length differs from d");
        ComplexVector v(d);
        for (std::size_t i = 0; i < d; ++i) {
            v(i) = entry_from_json(jv[i]);
        }
        vectors.push_back(std::move(v));
    }
    return POVMSet::make(d, std::move(vectors));
}

void dataset_save(const POVMSet& set, const std::string& path)
{
    json doc;
    doc["d"] = set.d;
    doc["vectors"] = json::array();
    for (const auto& v : set.vectors) {
        json jv = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            jv.push_back({v(i).real(), v(i).imag()});
        }
        doc["vectors"].push_back(std::move(jv));
    }
    write_file(path, doc.dump() + "\n");
}

} // namespace qmat::defect
