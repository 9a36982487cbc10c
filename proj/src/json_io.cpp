#include "sylv/json_io.hpp"

#include <fstream>

namespace sylv {

namespace {

const char* kIdentityText =
    "det(A)*det(A[i,j|k,l]) == det(A[i|k])*det(A[j|l]) - det(A[i|l])*det(A[j|k])";

int get_dimension(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw parse_error(std::string("matrix JSON needs an integer \"") + field + "\"");
    }
    const auto v = j[field].get<long long>();
    if (v < 0) throw parse_error(std::string("\"") + field + "\" must be nonnegative");
    return static_cast<int>(v);
}

} // namespace

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("matrix JSON must be an object");
    const int rows = get_dimension(j, "rows");
    const int cols = get_dimension(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw parse_error("matrix JSON needs an \"entries\" array");
    }
    const auto& entries = j["entries"];
    if (static_cast<int>(entries.size()) != rows) {
        throw parse_error("\"entries\" must hold exactly " + std::to_string(rows) +
                          " rows");
    }
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = entries[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw parse_error("row " + std::to_string(r + 1) + " must hold exactly " +
                              std::to_string(cols) + " entries");
        }
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_string()) {
                throw parse_error("matrix entries must be decimal strings");
            }
            m(r, c) = parse_bigint(row[c].get<std::string>());
        }
    }
    return m;
}

nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

nlohmann::ordered_json report_to_json(const IdentityReport<MultiPoly>& rep,
                                      bool include_polys) {
    nlohmann::ordered_json j;
    j["identity"] = kIdentityText;
    j["n"] = rep.n;
    j["indices"] = rep.indices;
    j["holds"] = rep.holds;
    j["residual_terms"] = rep.residual.term_count();
    if (include_polys) {
        j["lhs"] = rep.lhs.str();
        j["rhs"] = rep.rhs.str();
    }
    return j;
}

nlohmann::ordered_json report_to_json(const IdentityReport<BigInt>& rep) {
    nlohmann::ordered_json j;
    j["identity"] = kIdentityText;
    j["n"] = rep.n;
    j["indices"] = rep.indices;
    j["holds"] = rep.holds;
    j["residual_terms"] = rep.residual == 0 ? 0 : 1;
    j["lhs"] = rep.lhs.get_str();
    j["rhs"] = rep.rhs.get_str();
    return j;
}

} // namespace sylv
