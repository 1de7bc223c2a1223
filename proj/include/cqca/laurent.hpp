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

/// Laurent polynomials with coefficients in F2.
///
/// A polynomial is stored as a little-endian bitset of machine words plus the
/// exponent of its lowest stored bit. Addition is XOR over aligned words and
/// multiplication is a carry-less convolution of words, so all arithmetic is
/// exact and branch-light.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cqca {

/// Degree sentinel for the zero polynomial.
inline constexpr int64_t NEG_INFINITY = std::numeric_limits<int64_t>::min();

namespace detail {

/// 64x64 -> 128 bit carry-less product, returned as (low, high).
inline std::pair<uint64_t, uint64_t> clmul64(uint64_t a, uint64_t b) {
    // Horner over the nibbles of `a`, most significant first.
    uint64_t lo_tab[16];
    uint64_t hi_tab[16];
    lo_tab[0] = 0;
    hi_tab[0] = 0;
    lo_tab[1] = b;
    hi_tab[1] = 0;
    for (unsigned k = 2; k < 16; k++) {
        if (k % 2 == 0) {
            lo_tab[k] = lo_tab[k / 2] << 1;
            hi_tab[k] = (hi_tab[k / 2] << 1) | (lo_tab[k / 2] >> 63);
        } else {
            lo_tab[k] = lo_tab[k - 1] ^ b;
            hi_tab[k] = hi_tab[k - 1];
        }
    }
    uint64_t lo = 0;
    uint64_t hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        unsigned nib = static_cast<unsigned>((a >> shift) & 15u);
        lo ^= lo_tab[nib];
        hi ^= hi_tab[nib];
    }
    return {lo, hi};
}

/// dst ^= src << bit_shift, growing dst as needed.
inline void xor_shifted_into(std::vector<uint64_t> &dst, std::span<const uint64_t> src, size_t bit_shift) {
    if (src.empty()) {
        return;
    }
    size_t word_shift = bit_shift / 64;
    unsigned sub = static_cast<unsigned>(bit_shift % 64);
    size_t needed = word_shift + src.size() + (sub != 0 ? 1 : 0);
    if (dst.size() < needed) {
        dst.resize(needed, 0);
    }
    if (sub == 0) {
        for (size_t k = 0; k < src.size(); k++) {
            dst[word_shift + k] ^= src[k];
        }
        return;
    }
    for (size_t k = 0; k < src.size(); k++) {
        dst[word_shift + k] ^= src[k] << sub;
        dst[word_shift + k + 1] ^= src[k] >> (64 - sub);
    }
}

inline int64_t highest_bit(std::span<const uint64_t> words) {
    for (size_t k = words.size(); k-- > 0;) {
        if (words[k] != 0) {
            return static_cast<int64_t>(k * 64 + 63 - std::countl_zero(words[k]));
        }
    }
    return -1;
}

inline void trim(std::vector<uint64_t> &words) {
    while (!words.empty() && words.back() == 0) {
        words.pop_back();
    }
}

/// Remainder of ordinary F2[u] polynomials (bit k = coefficient of u^k), in place.
inline void reduce_mod(std::vector<uint64_t> &num, std::span<const uint64_t> den) {
    int64_t dden = highest_bit(den);
    if (dden < 0) {
        throw std::domain_error("division by the zero polynomial");
    }
    for (int64_t dnum = highest_bit(num); dnum >= dden; dnum = highest_bit(num)) {
        xor_shifted_into(num, den, static_cast<size_t>(dnum - dden));
    }
    trim(num);
}

}  // namespace detail

class LaurentPoly {
   public:
    /// The zero polynomial.
    LaurentPoly() = default;

    static LaurentPoly monomial(int64_t exponent) {
        LaurentPoly p;
        p.words_.push_back(1);
        p.min_exp_ = exponent;
        return p;
    }

    static LaurentPoly one() {
        return monomial(0);
    }

    /// Sum of u^e over the listed exponents; repeated exponents cancel.
    static LaurentPoly from_exponents(std::span<const int64_t> exponents) {
        if (exponents.empty()) {
            return {};
        }
        auto [lo, hi] = std::minmax_element(exponents.begin(), exponents.end());
        LaurentPoly p;
        p.min_exp_ = *lo;
        p.words_.assign(static_cast<size_t>(*hi - *lo) / 64 + 1, 0);
        for (int64_t e : exponents) {
            size_t bit = static_cast<size_t>(e - *lo);
            p.words_[bit / 64] ^= uint64_t{1} << (bit % 64);
        }
        p.normalize();
        return p;
    }

    static LaurentPoly from_exponents(std::initializer_list<int64_t> exponents) {
        return from_exponents(std::span<const int64_t>(exponents.begin(), exponents.size()));
    }

    /// Builds from raw words whose bit 0 sits at `min_exp`.
    static LaurentPoly from_words(std::vector<uint64_t> words, int64_t min_exp) {
        LaurentPoly p;
        p.words_ = std::move(words);
        p.min_exp_ = min_exp;
        p.normalize();
        return p;
    }

    bool is_zero() const {
        return words_.empty();
    }
    bool is_one() const {
        return words_.size() == 1 && words_[0] == 1 && min_exp_ == 0;
    }
    bool is_monomial() const {
        return words_.size() == 1 && words_[0] == 1;
    }

    /// Lowest exponent. Only meaningful when nonzero.
    int64_t min_exp() const {
        return min_exp_;
    }
    /// Highest exponent, or NEG_INFINITY for zero.
    int64_t max_exp() const {
        if (is_zero()) {
            return NEG_INFINITY;
        }
        return min_exp_ + detail::highest_bit(words_);
    }

    bool coeff(int64_t e) const {
        if (is_zero() || e < min_exp_) {
            return false;
        }
        uint64_t bit = static_cast<uint64_t>(e - min_exp_);
        if (bit / 64 >= words_.size()) {
            return false;
        }
        return (words_[bit / 64] >> (bit % 64)) & 1;
    }

    /// The 64 coefficients of u^start .. u^(start+63), bit k for u^(start+k).
    uint64_t window(int64_t start) const {
        if (is_zero()) {
            return 0;
        }
        int64_t rel = start - min_exp_;
        auto word_or_zero = [&](int64_t idx) -> uint64_t {
            if (idx < 0 || idx >= static_cast<int64_t>(words_.size())) {
                return 0;
            }
            return words_[static_cast<size_t>(idx)];
        };
        int64_t idx = rel >= 0 ? rel / 64 : -((-rel + 63) / 64);
        unsigned sub = static_cast<unsigned>(rel - idx * 64);
        uint64_t lo = word_or_zero(idx);
        if (sub == 0) {
            return lo;
        }
        uint64_t hi = word_or_zero(idx + 1);
        return (lo >> sub) | (hi << (64 - sub));
    }

    size_t term_count() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += static_cast<size_t>(std::popcount(w));
        }
        return total;
    }

    std::vector<int64_t> exponents() const {
        std::vector<int64_t> out;
        out.reserve(term_count());
        for (size_t k = 0; k < words_.size(); k++) {
            for (uint64_t w = words_[k]; w != 0; w &= w - 1) {
                out.push_back(min_exp_ + static_cast<int64_t>(k * 64) + std::countr_zero(w));
            }
        }
        return out;
    }

    const std::vector<uint64_t> &words() const {
        return words_;
    }

    /// Multiplication by u^k.
    LaurentPoly shifted(int64_t k) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) {
            p.min_exp_ += k;
        }
        return p;
    }

    /// Image under u -> u^-1.
    LaurentPoly reflected() const {
        std::vector<int64_t> es = exponents();
        for (auto &e : es) {
            e = -e;
        }
        return from_exponents(es);
    }

    /// Terms with exponents in [lo, hi].
    LaurentPoly restricted(int64_t lo, int64_t hi) const {
        if (is_zero() || hi < lo || hi < min_exp_ || lo > max_exp()) {
            return {};
        }
        int64_t start = std::max(lo, min_exp_);
        int64_t stop = std::min(hi, max_exp());
        std::vector<uint64_t> out(static_cast<size_t>(stop - start) / 64 + 1, 0);
        for (size_t k = 0; k < out.size(); k++) {
            out[k] = window(start + static_cast<int64_t>(k) * 64);
        }
        int64_t width = stop - start + 1;
        if (width % 64 != 0) {
            out.back() &= (uint64_t{1} << (width % 64)) - 1;
        }
        return from_words(std::move(out), start);
    }

    friend LaurentPoly operator+(const LaurentPoly &p, const LaurentPoly &q) {
        if (p.is_zero()) {
            return q;
        }
        if (q.is_zero()) {
            return p;
        }
        int64_t base = std::min(p.min_exp_, q.min_exp_);
        std::vector<uint64_t> out;
        out.reserve(std::max(p.words_.size(), q.words_.size()) + 1);
        detail::xor_shifted_into(out, p.words_, static_cast<size_t>(p.min_exp_ - base));
        detail::xor_shifted_into(out, q.words_, static_cast<size_t>(q.min_exp_ - base));
        return from_words(std::move(out), base);
    }

    friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
        if (p.is_zero() || q.is_zero()) {
            return {};
        }
        std::vector<uint64_t> out(p.words_.size() + q.words_.size(), 0);
        for (size_t i = 0; i < p.words_.size(); i++) {
            uint64_t a = p.words_[i];
            if (a == 0) {
                continue;
            }
            for (size_t j = 0; j < q.words_.size(); j++) {
                auto [lo, hi] = detail::clmul64(a, q.words_[j]);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        return from_words(std::move(out), p.min_exp_ + q.min_exp_);
    }

    LaurentPoly &operator+=(const LaurentPoly &q) {
        *this = *this + q;
        return *this;
    }
    LaurentPoly &operator*=(const LaurentPoly &q) {
        *this = *this * q;
        return *this;
    }

    /// Parity of the number of shared exponents, i.e. the F2 dot product of
    /// the coefficient sequences.
    friend bool dot(const LaurentPoly &p, const LaurentPoly &q) {
        if (p.is_zero() || q.is_zero()) {
            return false;
        }
        int64_t lo = std::max(p.min_exp_, q.min_exp_);
        int64_t hi = std::min(p.max_exp(), q.max_exp());
        uint64_t acc = 0;
        for (int64_t e = lo; e <= hi; e += 64) {
            acc ^= p.window(e) & q.window(e);
        }
        return std::popcount(acc) & 1;
    }

    bool operator==(const LaurentPoly &other) const = default;

   private:
    void normalize() {
        detail::trim(words_);
        if (words_.empty()) {
            min_exp_ = 0;
            return;
        }
        size_t zero_words = 0;
        while (words_[zero_words] == 0) {
            zero_words++;
        }
        unsigned sub = static_cast<unsigned>(std::countr_zero(words_[zero_words]));
        size_t shift = zero_words * 64 + sub;
        if (shift == 0) {
            return;
        }
        if (sub == 0) {
            words_.erase(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(zero_words));
        } else {
            std::vector<uint64_t> out(words_.size() - zero_words, 0);
            for (size_t k = 0; k < out.size(); k++) {
                uint64_t lo = words_[zero_words + k] >> sub;
                uint64_t hi = zero_words + k + 1 < words_.size() ? words_[zero_words + k + 1] << (64 - sub) : 0;
                out[k] = lo | hi;
            }
            words_ = std::move(out);
            detail::trim(words_);
        }
        min_exp_ += static_cast<int64_t>(shift);
    }

    std::vector<uint64_t> words_;
    int64_t min_exp_ = 0;
};

struct DegreeSpan {
    int64_t min_exp;
    int64_t max_exp;
    bool operator==(const DegreeSpan &) const = default;
};

/// (min, max) exponent with nonzero coefficient; both NEG_INFINITY for zero.
inline DegreeSpan degree_span(const LaurentPoly &p) {
    if (p.is_zero()) {
        return {NEG_INFINITY, NEG_INFINITY};
    }
    return {p.min_exp(), p.max_exp()};
}

/// Highest exponent; NEG_INFINITY for the zero polynomial.
inline int64_t dg(const LaurentPoly &p) {
    return p.max_exp();
}

/// Associate of p with lowest exponent 0 (units u^k divided out).
inline LaurentPoly unit_normalized(const LaurentPoly &p) {
    return p.is_zero() ? p : p.shifted(-p.min_exp());
}

/// Greatest common divisor, normalized so that min_exp = 0.
inline LaurentPoly gcd(const LaurentPoly &p, const LaurentPoly &q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    std::vector<uint64_t> a = unit_normalized(p).words();
    std::vector<uint64_t> b = unit_normalized(q).words();
    while (!b.empty()) {
        detail::reduce_mod(a, b);
        std::swap(a, b);
    }
    return LaurentPoly::from_words(std::move(a), 0);
}

/// True iff d divides p in the Laurent ring. Zero divides only zero.
inline bool divides(const LaurentPoly &d, const LaurentPoly &p) {
    if (d.is_zero()) {
        return p.is_zero();
    }
    std::vector<uint64_t> r = unit_normalized(p).words();
    detail::reduce_mod(r, unit_normalized(d).words());
    return r.empty();
}

/// True iff the coefficient of u^(center+k) equals that of u^(center-k) for all k.
inline bool is_reflection_symmetric(const LaurentPoly &p, int64_t center) {
    if (p.is_zero()) {
        return true;
    }
    if (p.min_exp() + p.max_exp() != 2 * center) {
        return false;
    }
    return p.reflected().shifted(2 * center) == p;
}

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {
    }
    size_t position() const {
        return position_;
    }

   private:
    size_t position_;
};

/// Largest exponent magnitude accepted by parse_poly.
inline constexpr int64_t MAX_PARSED_EXPONENT = 1'000'000;

/// Parses `Poly := "0" | Term ("+" Term)*`, `Term := "1" | "u" | "u^" SignedInt`.
/// Whitespace is ignored and repeated terms cancel.
inline LaurentPoly parse_poly(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
            pos++;
        }
    };
    auto fail = [&](const std::string &what) -> LaurentPoly {
        throw ParseError("polynomial syntax error: " + what, pos);
    };

    skip_ws();
    if (pos == text.size()) {
        return fail("empty input");
    }
    if (text[pos] == '0') {
        pos++;
        skip_ws();
        if (pos != text.size()) {
            return fail("unexpected trailing input after '0'");
        }
        return {};
    }

    std::vector<int64_t> exponents;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            return fail("expected a term");
        }
        if (text[pos] == '1') {
            exponents.push_back(0);
            pos++;
        } else if (text[pos] == 'u') {
            pos++;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                pos++;
                skip_ws();
                size_t start = pos;
                bool negative = false;
                if (pos < text.size() && text[pos] == '-') {
                    negative = true;
                    pos++;
                    skip_ws();
                }
                int64_t value = 0;
                auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
                if (ec != std::errc() || end == text.data() + pos) {
                    return fail("expected an integer exponent");
                }
                if (value > MAX_PARSED_EXPONENT) {
                    pos = start;
                    return fail("exponent out of range");
                }
                pos = static_cast<size_t>(end - text.data());
                exponents.push_back(negative ? -value : value);
            } else {
                exponents.push_back(1);
            }
        } else {
            return fail(std::string("unexpected character '") + text[pos] + "'");
        }
        skip_ws();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '+') {
            return fail(std::string("expected '+' but found '") + text[pos] + "'");
        }
        pos++;
    }
    return LaurentPoly::from_exponents(exponents);
}

/// Renders in increasing exponent order, e.g. "u^-1 + 1 + u"; "0" for zero.
inline std::string to_string(const LaurentPoly &p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int64_t e : p.exponents()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += "u";
        } else {
            out += "u^" + std::to_string(e);
        }
    }
    return out;
}

/// Compact rendering without spaces, e.g. "u^-1+u".
inline std::string to_compact_string(const LaurentPoly &p) {
    std::string s = to_string(p);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

inline std::ostream &operator<<(std::ostream &out, const LaurentPoly &p) {
    return out << to_string(p);
}

}  // namespace cqca
