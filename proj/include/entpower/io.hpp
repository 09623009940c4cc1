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

#ifndef ENTPOWER_IO_HPP
#define ENTPOWER_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "entpower/latin.hpp"
#include "entpower/linalg.hpp"

namespace entpower {

// Every file carries a top-level "format": 1.
inline constexpr int kFileFormat = 1;

/// Matrix file: {"format": 1, "d": 2, "re": [[...], ...], "im": [[...], ...]}
/// with d^2 x d^2 real and imaginary parts.
struct MatrixFile {
    int d = 0;
    ComplexMatrix matrix;
};

MatrixFile matrix_from_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(int d, const ComplexMatrix &m);

/// Permutation file: {"format": 1, "d": 3, "images": [...]} on d^2 points.
struct PermutationFile {
    int d = 0;
    Permutation permutation;
};

PermutationFile permutation_from_json(const nlohmann::json &j);
nlohmann::json permutation_to_json(int d, const Permutation &p);

/// Latin square file: {"format": 1, "order": 3, "cells": [[...], ...]}.
LatinSquare latin_square_from_json(const nlohmann::json &j);
nlohmann::json latin_square_to_json(const LatinSquare &square);

/// Throws Error(Parse) if the file is missing or not JSON.
nlohmann::json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

/// 17 significant digits; parses back to the same double.
std::string format_double(double x);
double parse_double(std::string_view text);

/// Minimal CSV table: fixed header, rows of preformatted cells.
class CsvTable {
   public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::string str() const;

    static CsvTable parse(std::string_view text);

    const std::vector<std::string> &header() const noexcept {
        return header_;
    }
    const std::vector<std::vector<std::string>> &rows() const noexcept {
        return rows_;
    }

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace entpower

#endif
