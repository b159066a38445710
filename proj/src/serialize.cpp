#include "latgb/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "latgb/errors.hpp"

namespace latgb {

Json json_int(const Int& v) {
    if (fits_int64(v)) return Json(to_int64(v));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad integer literal '" + j.get<std::string>() + "'", 1, 1);
        }
    }
    throw parse_error("expected an integer or a decimal string", 1, 1);
}

Json matrix_to_json(const MatZ& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lattice_to_json(const IntegerLattice& L) {
    Json j;
    j["ambient_dim"] = L.ambient_dim;
    j["basis"] = matrix_to_json(L.basis);
    return j;
}

IntegerLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis"))
        throw parse_error("lattice document needs ambient_dim and basis", 1, 1);
    if (!j["ambient_dim"].is_number_integer())
        throw parse_error("ambient_dim must be an integer", 1, 1);
    const std::int64_t dim = j["ambient_dim"].get<std::int64_t>();
    if (dim < 1) throw parse_error("ambient_dim must be >= 1", 1, 1);
    const Json& rows = j["basis"];
    if (!rows.is_array()) throw parse_error("basis must be an array of rows", 1, 1);
    MatZ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<std::int64_t>(row.size()) != dim)
            throw parse_error("basis row width does not match ambient_dim", 1, 1);
        Eigen::Index c = 0;
        for (const auto& cell : row) m(r, c++) = int_from_json(cell);
        ++r;
    }
    return make_lattice(dim, m);
}

Json tensor_to_json(const CoeffTensor& t) {
    Json j;
    j["shape"] = t.shape.radices;
    Json entries = Json::array();
    for (const auto& e : t.entries) entries.push_back(json_int(e));
    j["entries"] = std::move(entries);
    return j;
}

CoeffTensor tensor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
        throw parse_error("tensor document needs shape and entries", 1, 1);
    if (!j["shape"].is_array()) throw parse_error("shape must be an array", 1, 1);
    std::vector<std::int64_t> radices;
    for (const auto& r : j["shape"]) {
        if (!r.is_number_integer()) throw parse_error("shape entries must be integers", 1, 1);
        radices.push_back(r.get<std::int64_t>());
    }
    if (radices.empty() ||
        std::any_of(radices.begin(), radices.end(), [](std::int64_t r) { return r < 1; }))
        throw parse_error("shape radices must be >= 1", 1, 1);
    TensorShape shape(std::move(radices));
    const Json& entries = j["entries"];
    if (!entries.is_array() ||
        static_cast<std::int64_t>(entries.size()) != shape.flat_size())
        throw parse_error("entries length must equal the shape's flat size", 1, 1);
    CoeffTensor t{shape, {}};
    for (const auto& e : entries) t.entries.push_back(int_from_json(e));
    return t;
}

Json basis_strings(const GroebnerBasis& G, const RingContext& ctx) {
    Json arr = Json::array();
    for (const auto& g : G.elements) arr.push_back(g.to_string(ctx));
    return arr;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw resource_error("cannot write file '" + path + "'");
    out << content;
}

}  // namespace latgb
