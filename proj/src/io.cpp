#include "bures/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace bures {

namespace {

MatrixFile from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        throw ParseError("matrix file: no rows");
    }
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw ParseError("matrix file: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j])) {
                throw ParseError("matrix file: non-finite entry");
            }
            m(i, j) = rows[i][j];
        }
    }
    return MatrixFile{n, std::move(m)};
}

MatrixFile parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("data")) {
        throw ParseError("matrix file: expected object with \"n\" and \"data\"");
    }
    int n = 0;
    std::vector<std::vector<double>> rows;
    try {
        n = doc.at("n").get<int>();
        rows = doc.at("data").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix file: bad field types: ") + e.what());
    }
    MatrixFile file = from_rows(rows);
    if (file.n != n) {
        throw ParseError("matrix file: \"n\" = " + std::to_string(n) +
                         " does not match data of size " + std::to_string(file.n));
    }
    return file;
}

MatrixFile parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto begin = cell.find_first_not_of(" \t\r");
            const auto end = cell.find_last_not_of(" \t\r");
            if (begin == std::string::npos) {
                throw ParseError("matrix file: empty CSV cell");
            }
            double value = 0.0;
            const char* first = cell.data() + begin;
            const char* last = cell.data() + end + 1;
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last) {
                throw ParseError("matrix file: bad CSV number '" +
                                 cell.substr(begin, end - begin + 1) + "'");
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    return from_rows(rows);
}

Matrix read_symmetric_gated(const std::string& path, const char* what) {
    const MatrixFile file = read_matrix_file(path);
    const double scale = file.data.norm();
    const double asym = (file.data - file.data.transpose()).norm();
    if (asym > kMaxFileAsymmetry * (scale > 0.0 ? scale : 1.0)) {
        throw ValidationError(std::string(what) + " '" + path +
                              "': asymmetry above the round-off gate; wrong file?");
    }
    return file.data;
}

}  // namespace

MatrixFile parse_matrix_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw ParseError("matrix file: empty");
    }
    return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("matrix file '" + path + "': cannot open");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_matrix_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (" + path + ")");
    }
}

SPDMatrix read_spd(const std::string& path) {
    return SPDMatrix(read_symmetric_gated(path, "SPD input"));
}

SymmetricTangent read_tangent(const std::string& path) {
    return SymmetricTangent(read_symmetric_gated(path, "tangent input"));
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_fixed12(double v) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return std::string(buf);
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace bures
