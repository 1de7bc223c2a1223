// Copyright 2026 The CQCA Lab Authors
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

#pragma once

// Matrix file format, one entry per line:
//
//   # comment
//   t11 = u^-1 + 1 + u
//   t12 = 1
//   t21: 1
//   t22 = 0
//
// All four keys are required; ':' and '=' are both accepted as separators.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cqca/cqca.hpp"
#include "cqca/laurent.hpp"

namespace cqca {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline CqcaMatrix parse_matrix_text(std::string_view text) {
    std::map<std::string, LaurentPoly, std::less<>> entries;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = strip(line);
        if (line.empty()) {
            continue;
        }
        size_t sep = line.find_first_of("=:");
        if (sep == std::string_view::npos) {
            throw ParseError("matrix file line " + std::to_string(line_no) + ": expected 'key = polynomial'", 0);
        }
        std::string key(strip(line.substr(0, sep)));
        if (key != "t11" && key != "t12" && key != "t21" && key != "t22") {
            throw ParseError("matrix file line " + std::to_string(line_no) + ": unknown key '" + key + "'", 0);
        }
        if (entries.count(key)) {
            throw ParseError("matrix file line " + std::to_string(line_no) + ": duplicate key '" + key + "'", 0);
        }
        entries[key] = parse_poly(line.substr(sep + 1));
    }
    for (const char *key : {"t11", "t12", "t21", "t22"}) {
        if (!entries.count(key)) {
            throw ParseError(std::string("matrix file: missing key '") + key + "'", 0);
        }
    }
    return {entries["t11"], entries["t12"], entries["t21"], entries["t22"]};
}

/// Built-in name or nullopt: glider, fractal, identity, swap, shear:<poly>.
inline std::optional<CqcaMatrix> builtin_matrix(std::string_view name) {
    if (name == "glider") {
        return glider_matrix();
    }
    if (name == "fractal") {
        return fractal_matrix();
    }
    if (name == "identity") {
        return CqcaMatrix::identity();
    }
    if (name == "swap") {
        return swap_matrix();
    }
    if (name.starts_with("shear:")) {
        return WordFactor::lower_shear(parse_poly(name.substr(6))).matrix();
    }
    if (name.starts_with("ushear:")) {
        return WordFactor::upper_shear(parse_poly(name.substr(7))).matrix();
    }
    return std::nullopt;
}

/// Resolves a matrix source: a built-in name, a '*'-separated product of
/// built-ins (leftmost outermost), or a path to a matrix file.
inline CqcaMatrix resolve_matrix(std::string_view source) {
    if (source.find('*') != std::string_view::npos) {
        CqcaMatrix acc = CqcaMatrix::identity();
        size_t start = 0;
        while (start <= source.size()) {
            size_t end = source.find('*', start);
            std::string_view part =
                strip(source.substr(start, end == std::string_view::npos ? source.size() - start : end - start));
            auto m = builtin_matrix(part);
            if (!m) {
                throw std::invalid_argument("unknown built-in automaton '" + std::string(part) + "'");
            }
            acc = acc * *m;
            start = end == std::string_view::npos ? source.size() + 1 : end + 1;
        }
        return acc;
    }
    if (auto m = builtin_matrix(strip(source))) {
        return *m;
    }
    std::ifstream in{std::string(source)};
    if (!in) {
        throw std::invalid_argument("'" + std::string(source) + "' is neither a built-in automaton nor a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str());
}

inline std::string to_matrix_text(const CqcaMatrix &m) {
    return "t11 = " + to_string(m.t11) + "\nt12 = " + to_string(m.t12) + "\nt21 = " + to_string(m.t21) +
           "\nt22 = " + to_string(m.t22) + "\n";
}

}  // namespace cqca
