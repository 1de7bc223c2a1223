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

/// Phase-space labels of Pauli products on the infinite chain.
///
/// A Pauli product is labelled by two Laurent polynomials: the X component
/// (coefficient of u^k set iff site k carries X or Y) and the Z component
/// (set iff site k carries Z or Y). Phases are not tracked here; see
/// finite_chain.hpp for phase-exact operators.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqca/laurent.hpp"

namespace cqca {

struct PhaseVector {
    LaurentPoly plus;   // X component
    LaurentPoly minus;  // Z component

    bool is_identity() const {
        return plus.is_zero() && minus.is_zero();
    }
    bool operator==(const PhaseVector &) const = default;
};

/// Site-indexed letters over {1, X, Y, Z} with the lattice index of the first letter.
struct PauliString {
    std::string letters;
    int64_t offset = 0;

    bool operator==(const PauliString &) const = default;
};

/// Max exponent over both components; NEG_INFINITY for the identity.
inline int64_t dg(const PhaseVector &v) {
    return std::max(dg(v.plus), dg(v.minus));
}

inline PhaseVector shifted(const PhaseVector &v, int64_t k) {
    return {v.plus.shifted(k), v.minus.shifted(k)};
}

inline PhaseVector restricted(const PhaseVector &v, int64_t lo, int64_t hi) {
    return {v.plus.restricted(lo, hi), v.minus.restricted(lo, hi)};
}

inline PhaseVector pauli_to_phase_space(std::string_view letters, int64_t offset) {
    if (letters.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    std::vector<int64_t> xs;
    std::vector<int64_t> zs;
    for (size_t k = 0; k < letters.size(); k++) {
        int64_t site = offset + static_cast<int64_t>(k);
        switch (letters[k]) {
            case '1':
            case 'I':
                break;
            case 'X':
                xs.push_back(site);
                break;
            case 'Z':
                zs.push_back(site);
                break;
            case 'Y':
                xs.push_back(site);
                zs.push_back(site);
                break;
            default:
                throw std::invalid_argument(std::string("illegal Pauli letter '") + letters[k] + "' at index " +
                                            std::to_string(k));
        }
    }
    return {LaurentPoly::from_exponents(xs), LaurentPoly::from_exponents(zs)};
}

inline char letter_at(const PhaseVector &v, int64_t site) {
    bool x = v.plus.coeff(site);
    bool z = v.minus.coeff(site);
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    return z ? 'Z' : '1';
}

/// Minimal-width string without leading or trailing identities; ("1", 0) for the identity.
inline PauliString phase_space_to_pauli(const PhaseVector &v) {
    if (v.is_identity()) {
        return {"1", 0};
    }
    int64_t lo = std::min(v.plus.is_zero() ? v.minus.min_exp() : v.plus.min_exp(),
                          v.minus.is_zero() ? v.plus.min_exp() : v.minus.min_exp());
    int64_t hi = dg(v);
    PauliString out{std::string(static_cast<size_t>(hi - lo + 1), '1'), lo};
    for (int64_t site = lo; site <= hi; site++) {
        out.letters[static_cast<size_t>(site - lo)] = letter_at(v, site);
    }
    return out;
}

/// 0 iff the labelled operators commute, 1 iff they anticommute.
inline int symplectic_form(const PhaseVector &a, const PhaseVector &b) {
    return static_cast<int>(dot(a.plus, b.minus) ^ dot(a.minus, b.plus));
}

/// Label of the operator product, phase dropped.
inline PhaseVector compose_observables(const PhaseVector &a, const PhaseVector &b) {
    return {a.plus + b.plus, a.minus + b.minus};
}

inline std::string to_string(const PauliString &p) {
    return p.letters + "@" + std::to_string(p.offset);
}

inline std::string to_observable_string(const PhaseVector &v) {
    return to_string(phase_space_to_pauli(v));
}

/// Parses the observable literal "LETTERS[@offset]", e.g. "ZYX@-1".
inline PauliString parse_pauli_string(std::string_view text) {
    size_t at = text.find('@');
    PauliString out;
    out.letters = std::string(text.substr(0, at));
    if (out.letters.empty()) {
        throw ParseError("observable syntax error: missing letters", 0);
    }
    for (size_t k = 0; k < out.letters.size(); k++) {
        char c = out.letters[k];
        if (c != '1' && c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(std::string("observable syntax error: illegal letter '") + c + "'", k);
        }
    }
    if (at != std::string_view::npos) {
        std::string_view num = text.substr(at + 1);
        auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), out.offset);
        if (ec != std::errc() || end != num.data() + num.size() || num.empty()) {
            throw ParseError("observable syntax error: bad offset", at + 1);
        }
    }
    return out;
}

inline PhaseVector parse_observable(std::string_view text) {
    PauliString p = parse_pauli_string(text);
    return pauli_to_phase_space(p.letters, p.offset);
}

inline std::ostream &operator<<(std::ostream &out, const PhaseVector &v) {
    return out << to_observable_string(v);
}

}  // namespace cqca
