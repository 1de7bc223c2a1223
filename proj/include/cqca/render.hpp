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

// Space-time diagrams. Row k is the observable after k steps; time runs
// downward in every output format.
//
//   ASCII: '.', 'X', 'Y', 'Z', rows joined by '\n' (no trailing newline).
//   PPM:   binary P6, maxval 255, one pixel per cell.
//          identity = white, X = red, Y = green, Z = blue.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqca/cqca.hpp"
#include "cqca/phase_space.hpp"

namespace cqca {

struct SpaceTimeDiagram {
    std::vector<std::string> rows;
    int64_t left_site = 0;
    int64_t right_site = 0;

    size_t width() const {
        return static_cast<size_t>(right_site - left_site + 1);
    }
    bool operator==(const SpaceTimeDiagram &) const = default;
};

enum class DiagramFormat { Ascii, Ppm };

/// Rows 0..steps, windowed to the union of all supports padded by one site.
inline SpaceTimeDiagram build_diagram(const ValidatedCqca &t, const PhaseVector &initial, size_t steps) {
    std::vector<PhaseVector> states;
    states.reserve(steps + 1);
    states.push_back(initial);
    for (size_t k = 0; k < steps; k++) {
        states.push_back(apply(t, states.back()));
    }
    bool any = false;
    int64_t lo = 0;
    int64_t hi = 0;
    for (const auto &v : states) {
        if (v.is_identity()) {
            continue;
        }
        PauliString p = phase_space_to_pauli(v);
        int64_t a = p.offset;
        int64_t b = p.offset + static_cast<int64_t>(p.letters.size()) - 1;
        lo = any ? std::min(lo, a) : a;
        hi = any ? std::max(hi, b) : b;
        any = true;
    }
    SpaceTimeDiagram d;
    d.left_site = lo - 1;
    d.right_site = hi + 1;
    for (const auto &v : states) {
        std::string row(d.width(), '.');
        for (int64_t site = d.left_site; site <= d.right_site; site++) {
            char c = letter_at(v, site);
            row[static_cast<size_t>(site - d.left_site)] = c == '1' ? '.' : c;
        }
        d.rows.push_back(std::move(row));
    }
    return d;
}

inline std::string emit_ascii(const SpaceTimeDiagram &d) {
    std::string out;
    for (size_t k = 0; k < d.rows.size(); k++) {
        if (k != 0) {
            out += '\n';
        }
        out += d.rows[k];
    }
    return out;
}

inline std::string emit_ppm(const SpaceTimeDiagram &d) {
    size_t w = d.width();
    std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(d.rows.size()) + "\n255\n";
    out.reserve(out.size() + 3 * w * d.rows.size());
    for (const auto &row : d.rows) {
        if (row.size() != w) {
            throw std::invalid_argument("diagram rows have unequal widths");
        }
        for (char c : row) {
            unsigned char rgb[3] = {255, 255, 255};
            switch (c) {
                case 'X':
                    rgb[0] = 255, rgb[1] = 0, rgb[2] = 0;
                    break;
                case 'Y':
                    rgb[0] = 0, rgb[1] = 255, rgb[2] = 0;
                    break;
                case 'Z':
                    rgb[0] = 0, rgb[1] = 0, rgb[2] = 255;
                    break;
                default:
                    break;
            }
            out.append(reinterpret_cast<const char *>(rgb), 3);
        }
    }
    return out;
}

inline std::string emit(const SpaceTimeDiagram &d, DiagramFormat format) {
    return format == DiagramFormat::Ascii ? emit_ascii(d) : emit_ppm(d);
}

}  // namespace cqca
