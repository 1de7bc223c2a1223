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

/// Symplectic cellular automaton matrices.
///
/// A CqcaMatrix is a 2x2 matrix of Laurent polynomials whose first column is
/// the image of X = (1, 0) and whose second column is the image of Z = (0, 1).
/// Validation checks the three symplectic conditions (monomial determinant
/// u^(2a), entries symmetric about a, coprime columns), factors out the shift
/// u^a and tags the centered automaton with its trace class.
///
/// Centered automata form a group under matrix multiplication, so products,
/// powers and inverses of ValidatedCqca values never need revalidation.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqca/laurent.hpp"
#include "cqca/phase_space.hpp"

namespace cqca {

struct CqcaMatrix {
    LaurentPoly t11, t12, t21, t22;

    static CqcaMatrix identity() {
        return {LaurentPoly::one(), {}, {}, LaurentPoly::one()};
    }

    LaurentPoly det() const {
        return t11 * t22 + t12 * t21;
    }
    LaurentPoly trace() const {
        return t11 + t22;
    }
    /// Largest max-exponent over the four entries; NEG_INFINITY if all are zero.
    int64_t max_entry_degree() const {
        return std::max({dg(t11), dg(t12), dg(t21), dg(t22)});
    }
    /// Largest |exponent| over the four entries (the neighborhood radius).
    int64_t neighborhood_radius() const {
        int64_t r = 0;
        for (const LaurentPoly *p : {&t11, &t12, &t21, &t22}) {
            if (!p->is_zero()) {
                r = std::max({r, p->max_exp(), -p->min_exp()});
            }
        }
        return r;
    }

    friend CqcaMatrix operator*(const CqcaMatrix &a, const CqcaMatrix &b) {
        return {a.t11 * b.t11 + a.t12 * b.t21, a.t11 * b.t12 + a.t12 * b.t22, a.t21 * b.t11 + a.t22 * b.t21,
                a.t21 * b.t12 + a.t22 * b.t22};
    }
    friend PhaseVector operator*(const CqcaMatrix &m, const PhaseVector &v) {
        return {m.t11 * v.plus + m.t12 * v.minus, m.t21 * v.plus + m.t22 * v.minus};
    }
    bool operator==(const CqcaMatrix &) const = default;
};

enum class CqcaClassKind { Periodic, Glider, Fractal };

struct CqcaClass {
    CqcaClassKind kind = CqcaClassKind::Periodic;
    int64_t glider_speed = 0;  // n for Glider(n), else 0

    static CqcaClass periodic() {
        return {CqcaClassKind::Periodic, 0};
    }
    static CqcaClass glider(int64_t n) {
        return {CqcaClassKind::Glider, n};
    }
    static CqcaClass fractal() {
        return {CqcaClassKind::Fractal, 0};
    }
    bool operator==(const CqcaClass &) const = default;
};

inline std::string to_string(const CqcaClass &c) {
    switch (c.kind) {
        case CqcaClassKind::Periodic:
            return "Periodic";
        case CqcaClassKind::Glider:
            return "Glider(" + std::to_string(c.glider_speed) + ")";
        case CqcaClassKind::Fractal:
            return "Fractal";
    }
    return "?";
}

inline std::ostream &operator<<(std::ostream &out, const CqcaClass &c) {
    return out << to_string(c);
}

/// Trace trichotomy: constant -> Periodic, u^-n + u^n -> Glider(n), else Fractal.
inline CqcaClass classify_trace(const LaurentPoly &trace) {
    if (trace.is_zero() || trace.is_one()) {
        return CqcaClass::periodic();
    }
    int64_t n = trace.max_exp();
    if (n >= 1 && trace.term_count() == 2 && trace.min_exp() == -n) {
        return CqcaClass::glider(n);
    }
    return CqcaClass::fractal();
}

enum class SymplecticViolation { DetNotMonomial, DetOddShift, EntriesNotSymmetric, ColumnsNotCoprime, PureShift };

inline const char *violation_name(SymplecticViolation v) {
    switch (v) {
        case SymplecticViolation::DetNotMonomial:
            return "DetNotMonomial";
        case SymplecticViolation::DetOddShift:
            return "DetOddShift";
        case SymplecticViolation::EntriesNotSymmetric:
            return "EntriesNotSymmetric";
        case SymplecticViolation::ColumnsNotCoprime:
            return "ColumnsNotCoprime";
        case SymplecticViolation::PureShift:
            return "PureShift";
    }
    return "?";
}

class InvalidCqca : public std::invalid_argument {
   public:
    /// `detail` is the center for EntriesNotSymmetric, the 1-based column for
    /// ColumnsNotCoprime and the shift for DetOddShift / PureShift.
    InvalidCqca(SymplecticViolation violation, int64_t detail, const std::string &message)
        : std::invalid_argument(std::string(violation_name(violation)) + ": " + message),
          violation_(violation),
          detail_(detail) {
    }
    SymplecticViolation violation() const {
        return violation_;
    }
    int64_t detail() const {
        return detail_;
    }

   private:
    SymplecticViolation violation_;
    int64_t detail_;
};

/// Entrywise multiplication by u^-a.
inline CqcaMatrix center(const CqcaMatrix &m, int64_t a) {
    return {m.t11.shifted(-a), m.t12.shifted(-a), m.t21.shifted(-a), m.t22.shifted(-a)};
}

class ValidatedCqca;
ValidatedCqca validate(const CqcaMatrix &m);

/// A centered symplectic cellular automaton (det = 1, entries symmetric about 0).
class ValidatedCqca {
   public:
    static ValidatedCqca identity() {
        return ValidatedCqca(CqcaMatrix::identity());
    }

    const CqcaMatrix &matrix() const {
        return matrix_;
    }
    CqcaClass class_tag() const {
        return class_tag_;
    }
    LaurentPoly trace() const {
        return matrix_.trace();
    }

    friend ValidatedCqca compose(const ValidatedCqca &s, const ValidatedCqca &t) {
        return ValidatedCqca(s.matrix_ * t.matrix_);
    }
    /// Inverse over the Laurent ring; for det = 1 this is the adjugate.
    friend ValidatedCqca inverse(const ValidatedCqca &t) {
        const CqcaMatrix &m = t.matrix_;
        return ValidatedCqca(CqcaMatrix{m.t22, m.t12, m.t21, m.t11});
    }
    friend ValidatedCqca validate(const CqcaMatrix &m);

    bool operator==(const ValidatedCqca &other) const {
        return matrix_ == other.matrix_;
    }

   private:
    explicit ValidatedCqca(CqcaMatrix m) : matrix_(std::move(m)), class_tag_(classify_trace(matrix_.trace())) {
    }

    CqcaMatrix matrix_;
    CqcaClass class_tag_;
};

/// Checks the symplectic conditions, centers and classifies.
/// Throws InvalidCqca naming the first violated condition.
inline ValidatedCqca validate(const CqcaMatrix &m) {
    LaurentPoly det = m.det();
    if (!det.is_monomial()) {
        throw InvalidCqca(SymplecticViolation::DetNotMonomial, 0,
                          "det = " + to_string(det) + " is not a monomial u^(2a)");
    }
    if (det.min_exp() % 2 != 0) {
        throw InvalidCqca(SymplecticViolation::DetOddShift, det.min_exp(),
                          "det = " + to_string(det) + " has an odd exponent");
    }
    int64_t a = det.min_exp() / 2;
    for (const LaurentPoly *p : {&m.t11, &m.t12, &m.t21, &m.t22}) {
        if (!is_reflection_symmetric(*p, a)) {
            throw InvalidCqca(SymplecticViolation::EntriesNotSymmetric, a,
                              "entry " + to_string(*p) + " is not symmetric about " + std::to_string(a));
        }
    }
    if (!gcd(m.t11, m.t21).is_one()) {
        throw InvalidCqca(SymplecticViolation::ColumnsNotCoprime, 1,
                          "column 1 has common divisor " + to_string(gcd(m.t11, m.t21)));
    }
    if (!gcd(m.t12, m.t22).is_one()) {
        throw InvalidCqca(SymplecticViolation::ColumnsNotCoprime, 2,
                          "column 2 has common divisor " + to_string(gcd(m.t12, m.t22)));
    }
    CqcaMatrix centered = center(m, a);
    if (a != 0 && centered == CqcaMatrix::identity()) {
        throw InvalidCqca(SymplecticViolation::PureShift, a, "matrix is the pure lattice shift u^" + std::to_string(a));
    }
    return ValidatedCqca(std::move(centered));
}

inline CqcaClass classify(const ValidatedCqca &t) {
    return classify_trace(t.trace());
}

inline PhaseVector apply(const ValidatedCqca &t, const PhaseVector &v) {
    return t.matrix() * v;
}

inline ValidatedCqca power(const ValidatedCqca &t, uint64_t k) {
    ValidatedCqca result = ValidatedCqca::identity();
    ValidatedCqca base = t;
    for (; k != 0; k >>= 1) {
        if (k & 1) {
            result = compose(result, base);
        }
        if (k > 1) {
            base = compose(base, base);
        }
    }
    return result;
}

/// Smallest p <= cap with t^p = 1, or nullopt (NotPeriodicWithin(cap)).
inline std::optional<uint64_t> period(const ValidatedCqca &t, uint64_t cap) {
    if (t.class_tag().kind != CqcaClassKind::Periodic) {
        return std::nullopt;
    }
    ValidatedCqca acc = t;
    for (uint64_t p = 1; p <= cap; p++) {
        if (acc.matrix() == CqcaMatrix::identity()) {
            return p;
        }
        acc = compose(acc, t);
    }
    return std::nullopt;
}

/// dg of the trace, with constant traces (including 0) mapped to 0.
inline int64_t trace_degree(const ValidatedCqca &t) {
    LaurentPoly tr = t.trace();
    return tr.is_zero() ? 0 : std::max<int64_t>(0, tr.max_exp());
}

/// Generators used to build automata as words.
struct WordFactor {
    enum class Kind { Swap, LowerShear, UpperShear };
    Kind kind = Kind::Swap;
    LaurentPoly p;  // shear polynomial, symmetric about 0

    static WordFactor swap() {
        return {Kind::Swap, {}};
    }
    static WordFactor lower_shear(LaurentPoly p) {
        return {Kind::LowerShear, std::move(p)};
    }
    static WordFactor upper_shear(LaurentPoly p) {
        return {Kind::UpperShear, std::move(p)};
    }

    /// [[0,1],[1,0]], [[1,0],[p,1]] or [[1,p],[0,1]].
    CqcaMatrix matrix() const {
        switch (kind) {
            case Kind::Swap:
                return {{}, LaurentPoly::one(), LaurentPoly::one(), {}};
            case Kind::LowerShear:
                return {LaurentPoly::one(), {}, p, LaurentPoly::one()};
            case Kind::UpperShear:
                return {LaurentPoly::one(), p, {}, LaurentPoly::one()};
        }
        return CqcaMatrix::identity();
    }
};

/// Product of the factor matrices in word order (leftmost factor outermost).
inline ValidatedCqca from_word(std::span<const WordFactor> word) {
    CqcaMatrix m = CqcaMatrix::identity();
    for (const WordFactor &f : word) {
        m = m * f.matrix();
    }
    return validate(m);
}

/// Uniformly random polynomial symmetric about 0 with dg <= max_degree.
inline LaurentPoly random_symmetric_poly(std::mt19937_64 &rng, int64_t max_degree) {
    std::vector<int64_t> es;
    if (rng() & 1) {
        es.push_back(0);
    }
    for (int64_t k = 1; k <= max_degree; k++) {
        if (rng() & 1) {
            es.push_back(k);
            es.push_back(-k);
        }
    }
    return LaurentPoly::from_exponents(es);
}

/// Raw generator draws only (no distribution objects), so words are identical
/// across standard library implementations.
inline std::vector<WordFactor> random_word(uint64_t seed, size_t word_length, int64_t max_shear_degree) {
    std::mt19937_64 rng(seed);
    std::vector<WordFactor> word;
    word.reserve(word_length);
    for (size_t k = 0; k < word_length; k++) {
        switch (rng() % 3) {
            case 0:
                word.push_back(WordFactor::swap());
                break;
            case 1:
                word.push_back(WordFactor::lower_shear(random_symmetric_poly(rng, max_shear_degree)));
                break;
            default:
                word.push_back(WordFactor::upper_shear(random_symmetric_poly(rng, max_shear_degree)));
                break;
        }
    }
    return word;
}

inline ValidatedCqca random_cqca(uint64_t seed, size_t word_length, int64_t max_shear_degree) {
    return from_word(random_word(seed, word_length, max_shear_degree));
}

// Built-in automata.

inline CqcaMatrix glider_matrix() {
    return {{}, LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::from_exponents({-1, 1})};
}

inline CqcaMatrix fractal_matrix() {
    return {LaurentPoly::from_exponents({-1, 0, 1}), LaurentPoly::one(), LaurentPoly::one(), {}};
}

inline CqcaMatrix swap_matrix() {
    return WordFactor::swap().matrix();
}

inline ValidatedCqca glider() {
    return validate(glider_matrix());
}

inline ValidatedCqca fractal() {
    return validate(fractal_matrix());
}

inline std::ostream &operator<<(std::ostream &out, const CqcaMatrix &m) {
    return out << "[[" << m.t11 << ", " << m.t12 << "], [" << m.t21 << ", " << m.t22 << "]]";
}

}  // namespace cqca
