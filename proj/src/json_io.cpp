#include "blockgate/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace blockgate {

namespace {

using nlohmann::json;

json matrix_to_value(const ComplexMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.entries()) {
        entries.push_back(json::array({z.real(), z.imag()}));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_value(const json& value) {
    if (!value.is_object() || !value.contains("rows") || !value.contains("cols") ||
        !value.contains("entries")) {
        throw std::invalid_argument("matrix JSON must carry rows, cols and entries");
    }
    if (!value["rows"].is_number_unsigned() || !value["cols"].is_number_unsigned()) {
        throw std::invalid_argument("matrix rows/cols must be positive integers");
    }
    const auto rows = value["rows"].get<std::size_t>();
    const auto cols = value["cols"].get<std::size_t>();
    const json& raw = value["entries"];
    if (!raw.is_array()) {
        throw std::invalid_argument("matrix entries must be an array of [re, im] pairs");
    }
    std::vector<Complex> entries;
    entries.reserve(raw.size());
    for (const json& pair : raw) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw std::invalid_argument("matrix entries must be an array of [re, im] pairs");
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix::from_data(rows, cols, std::move(entries));
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
    return matrix_to_value(m).dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
    return matrix_from_value(value);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << matrix_to_json(m) << '\n';
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return matrix_from_json(text);
}

}  // namespace blockgate
