// Copyright 2026 The entpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entpower/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "entpower/error.hpp"

namespace entpower {

using nlohmann::json;

namespace {

void require_format(const json &j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::Parse, "expected a JSON object");
    }
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != kFileFormat) {
        throw Error(ErrorKind::Parse, "missing or unsupported \"format\" (expected 1)");
    }
}

int require_int(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw Error(ErrorKind::Parse, std::string("missing integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

Eigen::MatrixXd real_grid(const json &j, const char *key, int side) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != side) {
        throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must have " + std::to_string(side) + " rows");
    }
    Eigen::MatrixXd out(side, side);
    for (int r = 0; r < side; ++r) {
        const json &row = j[key][static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != side) {
            throw Error(ErrorKind::Parse, std::string("\"") + key + "\" rows must have " + std::to_string(side) +
                                              " entries");
        }
        for (int c = 0; c < side; ++c) {
            const json &v = row[static_cast<std::size_t>(c)];
            if (!v.is_number()) {
                throw Error(ErrorKind::Parse, std::string("non-numeric entry in \"") + key + "\"");
            }
            out(r, c) = v.get<double>();
        }
    }
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

MatrixFile matrix_from_json(const json &j) {
    require_format(j);
    MatrixFile f;
    f.d = require_int(j, "d");
    if (f.d < kMinLocalDim || f.d > kMaxLocalDim) {
        throw Error(ErrorKind::Parse, "\"d\" must lie in [2, 16]");
    }
    const int side = f.d * f.d;
    const Eigen::MatrixXd re = real_grid(j, "re", side);
    const Eigen::MatrixXd im = real_grid(j, "im", side);
    f.matrix = ComplexMatrix(side, side);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            f.matrix(r, c) = Complex(re(r, c), im(r, c));
        }
    }
    require_finite(f.matrix);
    return f;
}

json matrix_to_json(int d, const ComplexMatrix &m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rr = json::array();
        json ir = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ir.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return json{{"format", kFileFormat}, {"d", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

PermutationFile permutation_from_json(const json &j) {
    require_format(j);
    PermutationFile f;
    f.d = require_int(j, "d");
    if (f.d < kMinLocalDim || f.d > kMaxLocalDim) {
        throw Error(ErrorKind::Parse, "\"d\" must lie in [2, 16]");
    }
    if (!j.contains("images") || !j["images"].is_array() || static_cast<int>(j["images"].size()) != f.d * f.d) {
        throw Error(ErrorKind::Parse, "\"images\" must list d^2 integers");
    }
    std::vector<int> images;
    for (const auto &v : j["images"]) {
        if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "non-integer image");
        images.push_back(v.get<int>());
    }
    f.permutation = Permutation(std::move(images));
    return f;
}

json permutation_to_json(int d, const Permutation &p) {
    return json{{"format", kFileFormat},
                {"d", d},
                {"images", std::vector<int>(p.images().begin(), p.images().end())}};
}

LatinSquare latin_square_from_json(const json &j) {
    require_format(j);
    const int order = require_int(j, "order");
    if (!j.contains("cells") || !j["cells"].is_array() || static_cast<int>(j["cells"].size()) != order) {
        throw Error(ErrorKind::Parse, "\"cells\" must have `order` rows");
    }
    std::vector<std::vector<int>> cells;
    for (const auto &row : j["cells"]) {
        if (!row.is_array()) throw Error(ErrorKind::Parse, "cell rows must be arrays");
        std::vector<int> r;
        for (const auto &v : row) {
            if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "non-integer cell");
            r.push_back(v.get<int>());
        }
        cells.push_back(std::move(r));
    }
    return LatinSquare(std::move(cells));
}

json latin_square_to_json(const LatinSquare &square) {
    return json{{"format", kFileFormat}, {"order", square.order()}, {"cells", square.cells()}};
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Parse, "cannot write " + path.string());
    }
    out << text;
}

std::string format_double(double x) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s.precision(17);
    s << x;
    return s.str();
}

double parse_double(std::string_view text) {
    const std::string buf(text);
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || (errno == ERANGE && std::isinf(v))) {
        throw Error(ErrorKind::Parse, "not a number: '" + buf + "'");
    }
    return v;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw Error(ErrorKind::ShapeMismatch, "CSV row width does not match the header");
    }
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::ostringstream s;
    auto line = [&s](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s << ',';
            s << cells[i];
        }
        s << '\n';
    };
    line(header_);
    for (const auto &r : rows_) line(r);
    return s.str();
}

CsvTable CsvTable::parse(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) {
        throw Error(ErrorKind::Parse, "CSV has no header");
    }
    CsvTable t(split_csv_line(lines.front()));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        t.add_row(split_csv_line(lines[i]));
    }
    return t;
}

}  // namespace entpower
