#include "quatsp/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "quatsp/errors.hpp"

namespace quatsp {

namespace {

using nlohmann::json;

std::string at_entry(std::size_t i, std::size_t j) {
    return " at entry row " + std::to_string(i) + ", column " + std::to_string(j);
}

std::size_t get_count(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        throw ParseError(std::string("matrix file: missing or invalid \"") + key + "\"");
    return j[key].get<std::size_t>();
}

QMatrix from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix file: top level must be a JSON object");
    std::size_t rows = get_count(j, "rows"), cols = get_count(j, "cols");
    if (rows > (1u << 20) || cols > (1u << 20) || (rows != 0 && cols > (1u << 24) / rows))
        throw ParseError("matrix file: dimensions unreasonably large");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
        throw ParseError("matrix file: \"entries\" must be an array of " + std::to_string(rows) +
                         " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["entries"][i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix file: row " + std::to_string(i) + " must be an array of " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 4)
                throw ParseError("matrix file: expected a [w, x, y, z] array" + at_entry(i, c));
            double comp[4];
            for (std::size_t s = 0; s < 4; ++s) {
                if (!e[s].is_number())
                    throw ParseError("matrix file: non-numeric component" + at_entry(i, c));
                comp[s] = e[s].get<double>();
            }
            m(i, c) = Quaternion{comp[0], comp[1], comp[2], comp[3]};
            if (!is_finite(m(i, c)))
                throw ParseError("matrix file: non-finite component" + at_entry(i, c));
        }
    }
    return m;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        // Covers syntax errors (with line/column text) and number overflow.
        throw ParseError(e.what());
    }
}

}  // namespace

QMatrix read_matrix(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("matrix file: read failure");
    return from_json(parse_text(buf.str()));
}

QMatrix read_matrix(const std::string& text) { return from_json(parse_text(text)); }

QMatrix read_matrix_path(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return read_matrix(f);
}

std::string format_matrix(const QMatrix& m) {
    for (const Quaternion& q : m.data())
        if (!is_finite(q))
            throw std::invalid_argument("cannot serialize non-finite matrix entries");
    // One matrix row per line; numbers go through the library's shortest
    // round-trip double formatting.
    std::string out = "{\n \"rows\": " + std::to_string(m.rows()) +
                      ",\n \"cols\": " + std::to_string(m.cols()) + ",\n \"entries\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Quaternion& q = m(i, c);
            row.push_back(json::array({q.w, q.x, q.y, q.z}));
        }
        out += (i == 0 ? "\n  " : ",\n  ") + row.dump();
    }
    out += m.rows() == 0 ? "]\n}\n" : "\n ]\n}\n";
    return out;
}

void write_matrix(std::ostream& out, const QMatrix& m) { out << format_matrix(m); }

void write_matrix_path(const std::string& path, const QMatrix& m) {
    if (path == "-") {
        write_matrix(std::cout, m);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    write_matrix(f, m);
}

}  // namespace quatsp
