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

/// Phase-exact Pauli simulation on finite open chains and rings.
///
/// This is the brute-force counterpart of the symbolic modules: operators are
/// explicit N-site Pauli strings with a power of i, automata are truncated or
/// wrapped one-site images, and entropies come from F2 ranks of explicit
/// generator matrices.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqca/cqca.hpp"
#include "cqca/f2_rank.hpp"
#include "cqca/phase_space.hpp"
#include "cqca/stabilizer.hpp"

namespace cqca {

/// i^phase_exp times a tensor product of Hermitian Pauli letters on N sites.
class FiniteOperator {
   public:
    explicit FiniteOperator(size_t num_sites = 0)
        : n_(num_sites), xs_((num_sites + 63) / 64, 0), zs_((num_sites + 63) / 64, 0) {
    }

    static FiniteOperator single(size_t num_sites, size_t site, char letter) {
        if (site >= num_sites) {
            throw std::out_of_range("site " + std::to_string(site) + " outside chain of " + std::to_string(num_sites));
        }
        FiniteOperator op(num_sites);
        op.set_letter(site, letter);
        return op;
    }

    /// One letter per site from {1, I, X, Y, Z}.
    static FiniteOperator from_letters(std::string_view letters, unsigned phase_exp = 0) {
        FiniteOperator op(letters.size());
        for (size_t k = 0; k < letters.size(); k++) {
            op.set_letter(k, letters[k]);
        }
        op.phase_ = phase_exp % 4;
        return op;
    }

    size_t num_sites() const {
        return n_;
    }
    unsigned phase_exp() const {
        return phase_;
    }
    void set_phase_exp(unsigned p) {
        phase_ = p % 4;
    }
    bool x(size_t site) const {
        return get_bit(xs_, site);
    }
    bool z(size_t site) const {
        return get_bit(zs_, site);
    }
    const BitRow &x_bits() const {
        return xs_;
    }
    const BitRow &z_bits() const {
        return zs_;
    }

    void set_letter(size_t site, char letter) {
        bool xb = false;
        bool zb = false;
        switch (letter) {
            case '1':
            case 'I':
                break;
            case 'X':
                xb = true;
                break;
            case 'Y':
                xb = zb = true;
                break;
            case 'Z':
                zb = true;
                break;
            default:
                throw std::invalid_argument(std::string("illegal Pauli letter '") + letter + "'");
        }
        set_bit(xs_, site, xb);
        set_bit(zs_, site, zb);
    }

    char letter(size_t site) const {
        bool xb = x(site);
        bool zb = z(site);
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '1');
    }

    std::string letters() const {
        std::string out(n_, '1');
        for (size_t k = 0; k < n_; k++) {
            out[k] = letter(k);
        }
        return out;
    }

    /// Number of non-identity sites.
    size_t weight() const {
        size_t w = 0;
        for (size_t k = 0; k < xs_.size(); k++) {
            w += static_cast<size_t>(std::popcount(xs_[k] | zs_[k]));
        }
        return w;
    }

    std::optional<size_t> single_site() const {
        if (weight() != 1) {
            return std::nullopt;
        }
        for (size_t k = 0; k < n_; k++) {
            if (x(k) || z(k)) {
                return k;
            }
        }
        return std::nullopt;
    }

    bool same_letters(const FiniteOperator &other) const {
        return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_;
    }

    /// Exact product with phase: letters are converted to X^x Z^z form
    /// (Y = i X Z), multiplied there, and converted back.
    friend FiniteOperator operator*(const FiniteOperator &a, const FiniteOperator &b) {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("operator size mismatch");
        }
        FiniteOperator out(a.n_);
        unsigned q = a.phase_ + b.phase_;
        for (size_t k = 0; k < a.xs_.size(); k++) {
            q += static_cast<unsigned>(std::popcount(a.xs_[k] & a.zs_[k]));
            q += static_cast<unsigned>(std::popcount(b.xs_[k] & b.zs_[k]));
            q += 2u * static_cast<unsigned>(std::popcount(a.zs_[k] & b.xs_[k]));
            out.xs_[k] = a.xs_[k] ^ b.xs_[k];
            out.zs_[k] = a.zs_[k] ^ b.zs_[k];
            q += 4u - static_cast<unsigned>(std::popcount(out.xs_[k] & out.zs_[k])) % 4u;
        }
        out.phase_ = q % 4;
        return out;
    }

    /// 0 if the operators commute, 1 if they anticommute.
    friend int symplectic_form(const FiniteOperator &a, const FiniteOperator &b) {
        unsigned acc = 0;
        for (size_t k = 0; k < a.xs_.size(); k++) {
            acc += static_cast<unsigned>(std::popcount((a.xs_[k] & b.zs_[k]) ^ (a.zs_[k] & b.xs_[k])));
        }
        return static_cast<int>(acc & 1);
    }

    bool operator==(const FiniteOperator &) const = default;

   private:
    size_t n_;
    BitRow xs_;
    BitRow zs_;
    unsigned phase_ = 0;
};

/// Phase prefix ("+", "+i", "-", "-i") followed by the site letters.
inline std::string to_string(const FiniteOperator &op) {
    static const char *prefixes[] = {"+", "+i", "-", "-i"};
    return prefixes[op.phase_exp()] + op.letters();
}

enum class Boundary { Open, Ring };

enum class FiniteChainViolation { BoundaryBreaksAutomorphism, GeneratorsDoNotCommute, NotPure };

inline const char *violation_name(FiniteChainViolation v) {
    switch (v) {
        case FiniteChainViolation::BoundaryBreaksAutomorphism:
            return "BoundaryBreaksAutomorphism";
        case FiniteChainViolation::GeneratorsDoNotCommute:
            return "GeneratorsDoNotCommute";
        case FiniteChainViolation::NotPure:
            return "NotPure";
    }
    return "?";
}

class FiniteChainError : public std::runtime_error {
   public:
    FiniteChainError(FiniteChainViolation violation, const std::string &message)
        : std::runtime_error(std::string(violation_name(violation)) + ": " + message), violation_(violation) {
    }
    FiniteChainViolation violation() const {
        return violation_;
    }

   private:
    FiniteChainViolation violation_;
};

/// Per-site images of X_i and Z_i; the image of Y_i is i T(X_i) T(Z_i).
struct FiniteRule {
    size_t num_sites = 0;
    Boundary boundary = Boundary::Open;
    std::vector<FiniteOperator> x_images;
    std::vector<FiniteOperator> z_images;

    FiniteOperator image(size_t site, char letter) const {
        switch (letter) {
            case 'X':
                return x_images.at(site);
            case 'Z':
                return z_images.at(site);
            case 'Y': {
                FiniteOperator y = x_images.at(site) * z_images.at(site);
                y.set_phase_exp(y.phase_exp() + 1);
                return y;
            }
            default:
                return FiniteOperator(num_sites);
        }
    }

    /// One automaton step: T(i^q prod_k X_k^x Z_k^z) = i^q prod_k T(X_k)^x T(Z_k)^z.
    FiniteOperator apply(const FiniteOperator &op) const {
        if (op.num_sites() != num_sites) {
            throw std::invalid_argument("operator size does not match rule");
        }
        FiniteOperator out(num_sites);
        unsigned q = op.phase_exp();
        for (size_t k = 0; k < num_sites; k++) {
            bool xb = op.x(k);
            bool zb = op.z(k);
            if (xb && zb) {
                q += 1;
            }
            if (xb) {
                out = out * x_images[k];
            }
            if (zb) {
                out = out * z_images[k];
            }
        }
        out.set_phase_exp(out.phase_exp() + q);
        return out;
    }
};

/// Places a phase-space label on the ring Z_N (exponents taken mod N); phase 0.
inline FiniteOperator wrap_onto_ring(const PhaseVector &v, size_t num_sites) {
    FiniteOperator op(num_sites);
    auto wrap = [&](int64_t e) {
        int64_t m = static_cast<int64_t>(num_sites);
        return static_cast<size_t>(((e % m) + m) % m);
    };
    BitRow xs = make_row(num_sites);
    BitRow zs = make_row(num_sites);
    for (int64_t e : v.plus.exponents()) {
        flip_bit(xs, wrap(e));
    }
    for (int64_t e : v.minus.exponents()) {
        flip_bit(zs, wrap(e));
    }
    for (size_t k = 0; k < num_sites; k++) {
        bool xb = get_bit(xs, k);
        bool zb = get_bit(zs, k);
        op.set_letter(k, xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '1'));
    }
    return op;
}

/// Places a label on the open chain 0..N-1, dropping sites outside; phase 0.
inline FiniteOperator truncate_onto_chain(const PhaseVector &v, size_t num_sites) {
    FiniteOperator op(num_sites);
    for (size_t k = 0; k < num_sites; k++) {
        op.set_letter(k, letter_at(v, static_cast<int64_t>(k)));
    }
    return op;
}

/// True iff the rule preserves the commutation relations of all 2N single-site
/// generators, i.e. M^T J M = J for its binary update matrix M.
inline bool is_automorphism(const FiniteRule &rule) {
    size_t n = rule.num_sites;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i < j && symplectic_form(rule.x_images[i], rule.x_images[j]) != 0) {
                return false;
            }
            if (i < j && symplectic_form(rule.z_images[i], rule.z_images[j]) != 0) {
                return false;
            }
            if (symplectic_form(rule.x_images[i], rule.z_images[j]) != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

/// Restricts (Open) or wraps (Ring) the one-site images of a centered
/// automaton onto N sites. Images of X_i and Z_i carry a + sign.
inline FiniteRule truncate_rule(const ValidatedCqca &t, size_t num_sites, Boundary boundary) {
    int64_t radius = t.matrix().neighborhood_radius();
    if (static_cast<int64_t>(num_sites) <= 2 * radius) {
        throw std::invalid_argument("chain of " + std::to_string(num_sites) + " sites is too short for radius " +
                                    std::to_string(radius));
    }
    FiniteRule rule;
    rule.num_sites = num_sites;
    rule.boundary = boundary;
    const CqcaMatrix &m = t.matrix();
    PhaseVector x_col{m.t11, m.t21};
    PhaseVector z_col{m.t12, m.t22};
    for (size_t i = 0; i < num_sites; i++) {
        int64_t shift = static_cast<int64_t>(i);
        if (boundary == Boundary::Ring) {
            rule.x_images.push_back(wrap_onto_ring(shifted(x_col, shift), num_sites));
            rule.z_images.push_back(wrap_onto_ring(shifted(z_col, shift), num_sites));
        } else {
            rule.x_images.push_back(truncate_onto_chain(shifted(x_col, shift), num_sites));
            rule.z_images.push_back(truncate_onto_chain(shifted(z_col, shift), num_sites));
        }
    }
    if (!is_automorphism(rule)) {
        throw FiniteChainError(FiniteChainViolation::BoundaryBreaksAutomorphism,
                               "truncated images on " + std::to_string(num_sites) +
                                   " sites violate the commutation relations");
    }
    return rule;
}

/// The inverse automorphism, with phases fixed so that apply(inverse, apply(rule, op)) == op.
///
/// For a symplectic update, the preimage of P has z bit i equal to
/// sigma(T(X_i), P) and x bit i equal to sigma(T(Z_i), P).
inline FiniteRule inverse_rule(const FiniteRule &rule) {
    size_t n = rule.num_sites;
    FiniteRule inv;
    inv.num_sites = n;
    inv.boundary = rule.boundary;
    auto preimage = [&](const FiniteOperator &target) {
        FiniteOperator pre(n);
        for (size_t i = 0; i < n; i++) {
            bool zb = symplectic_form(rule.x_images[i], target) != 0;
            bool xb = symplectic_form(rule.z_images[i], target) != 0;
            pre.set_letter(i, xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '1'));
        }
        FiniteOperator image = rule.apply(pre);
        if (!image.same_letters(target)) {
            throw std::logic_error("rule is not invertible");
        }
        pre.set_phase_exp(pre.phase_exp() + 4 - image.phase_exp() + target.phase_exp());
        return pre;
    };
    for (size_t j = 0; j < n; j++) {
        inv.x_images.push_back(preimage(FiniteOperator::single(n, j, 'X')));
        inv.z_images.push_back(preimage(FiniteOperator::single(n, j, 'Z')));
    }
    return inv;
}

/// Element k is the operator after k steps, k = 0..steps.
inline std::vector<FiniteOperator> evolve_finite(const FiniteRule &rule, const FiniteOperator &op, size_t steps) {
    std::vector<FiniteOperator> out;
    out.reserve(steps + 1);
    out.push_back(op);
    for (size_t k = 0; k < steps; k++) {
        out.push_back(rule.apply(out.back()));
    }
    return out;
}

inline size_t mirror_search_cap(const FiniteRule &rule) {
    return 2 * rule.num_sites + 2;
}

/// First step at which a single-site Pauli comes back as a single-site Pauli
/// on the mirrored site N-1-site; nullopt (NotMirroredWithin(2N+2)) otherwise.
inline std::optional<size_t> mirror_time(const FiniteRule &rule, size_t site, char letter) {
    if (rule.boundary != Boundary::Open) {
        throw std::invalid_argument("mirror_time needs an open chain");
    }
    size_t target = rule.num_sites - 1 - site;
    FiniteOperator op = FiniteOperator::single(rule.num_sites, site, letter);
    size_t cap = mirror_search_cap(rule);
    for (size_t step = 1; step <= cap; step++) {
        op = rule.apply(op);
        if (op.single_site() == target) {
            return step;
        }
    }
    return std::nullopt;
}

/// Sign picked up under conjugation by Y on every site: -1 per X or Z factor.
inline int global_y_parity(const FiniteOperator &op) {
    size_t count = 0;
    for (size_t k = 0; k < op.x_bits().size(); k++) {
        count += static_cast<size_t>(std::popcount(op.x_bits()[k] ^ op.z_bits()[k]));
    }
    return count % 2 == 0 ? 1 : -1;
}

/// Entropy in ebits of the pure stabilizer state generated by `generators`,
/// for the subsystem `region`: rank(G restricted to region) - |region|.
/// Throws FiniteChainError unless the generators commute and have full rank N.
inline size_t stabilizer_entropy(std::span<const FiniteOperator> generators, std::span<const size_t> region) {
    if (generators.empty()) {
        return 0;
    }
    size_t n = generators.front().num_sites();
    for (size_t a = 0; a < generators.size(); a++) {
        for (size_t b = a + 1; b < generators.size(); b++) {
            if (symplectic_form(generators[a], generators[b]) != 0) {
                throw FiniteChainError(FiniteChainViolation::GeneratorsDoNotCommute,
                                       "generators " + std::to_string(a) + " and " + std::to_string(b) +
                                           " anticommute");
            }
        }
    }
    std::vector<BitRow> full;
    full.reserve(generators.size());
    for (const auto &g : generators) {
        BitRow row = make_row(2 * n);
        for (size_t k = 0; k < n; k++) {
            set_bit(row, k, g.x(k));
            set_bit(row, n + k, g.z(k));
        }
        full.push_back(std::move(row));
    }
    size_t rank = f2_rank(full, 2 * n);
    if (rank != n) {
        throw FiniteChainError(FiniteChainViolation::NotPure, "generator rank " + std::to_string(rank) +
                                                                  " is short of " + std::to_string(n) + " sites");
    }
    size_t m = region.size();
    std::vector<BitRow> restricted_rows;
    restricted_rows.reserve(generators.size());
    for (const auto &g : generators) {
        BitRow row = make_row(2 * m);
        for (size_t k = 0; k < m; k++) {
            set_bit(row, k, g.x(region[k]));
            set_bit(row, m + k, g.z(region[k]));
        }
        restricted_rows.push_back(std::move(row));
    }
    return f2_rank(std::move(restricted_rows), 2 * m) - m;
}

/// Contiguous block of sites on a ring, wrapping past N-1.
struct RingRegion {
    size_t start = 0;
    size_t length = 0;

    std::vector<size_t> sites(size_t num_sites) const {
        std::vector<size_t> out;
        out.reserve(length);
        for (size_t k = 0; k < length; k++) {
            out.push_back((start + k) % num_sites);
        }
        return out;
    }
};

/// The N wrapped translates of the seed as explicit ring operators.
inline std::vector<FiniteOperator> ring_generators(const TIStabilizerState &seed, size_t num_sites) {
    std::vector<FiniteOperator> gens;
    gens.reserve(num_sites);
    for (size_t x = 0; x < num_sites; x++) {
        gens.push_back(wrap_onto_ring(seed.generator(static_cast<int64_t>(x)), num_sites));
    }
    return gens;
}

/// Ebits between `region` and the rest of a ring of N sites carrying the
/// translation-invariant state of `seed`. Needs N >= 2(2n+1).
inline size_t ring_state_entropy(const TIStabilizerState &seed, size_t num_sites, RingRegion region) {
    if (static_cast<int64_t>(num_sites) < 2 * seed.generator_length()) {
        throw std::invalid_argument("ring of " + std::to_string(num_sites) + " sites is below the floor 2(2n+1) = " +
                                    std::to_string(2 * seed.generator_length()));
    }
    if (region.length < 1 || region.length > num_sites - 1) {
        throw std::invalid_argument("region length must lie in [1, N-1]");
    }
    auto gens = ring_generators(seed, num_sites);
    auto sites = region.sites(num_sites);
    return stabilizer_entropy(gens, sites);
}

}  // namespace cqca
