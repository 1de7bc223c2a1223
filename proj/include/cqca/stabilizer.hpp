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

/// Pure translation-invariant stabilizer states on the infinite chain.
///
/// The state is generated by all lattice translates of one seed label xi. The
/// seed must be symmetric about site 0 with coprime components; its half
/// length n = dg(xi) fixes every entanglement count:
///   - bipartite cut: n ebits,
///   - region of L sites: min(2n, L) ebits.
/// Under a centered automaton the seed evolves by matrix-vector products.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqca/cqca.hpp"
#include "cqca/laurent.hpp"
#include "cqca/phase_space.hpp"

namespace cqca {

enum class StateViolation { NotReflectionSymmetric, CenterIdentity, SingleLetterType, CommonDivisor };

inline const char *violation_name(StateViolation v) {
    switch (v) {
        case StateViolation::NotReflectionSymmetric:
            return "NotReflectionSymmetric";
        case StateViolation::CenterIdentity:
            return "CenterIdentity";
        case StateViolation::SingleLetterType:
            return "SingleLetterType";
        case StateViolation::CommonDivisor:
            return "CommonDivisor";
    }
    return "?";
}

class InvalidState : public std::invalid_argument {
   public:
    InvalidState(StateViolation violation, LaurentPoly common_divisor, const std::string &message)
        : std::invalid_argument(std::string(violation_name(violation)) + ": " + message),
          violation_(violation),
          common_divisor_(std::move(common_divisor)) {
    }
    StateViolation violation() const {
        return violation_;
    }
    /// The offending gcd for CommonDivisor; zero otherwise.
    const LaurentPoly &common_divisor() const {
        return common_divisor_;
    }

   private:
    StateViolation violation_;
    LaurentPoly common_divisor_;
};

class TIStabilizerState;
TIStabilizerState validate_state(const PhaseVector &v);

class TIStabilizerState {
   public:
    const PhaseVector &seed() const {
        return xi_;
    }
    /// Half length; the generator spans sites -n..n.
    int64_t n() const {
        return n_;
    }
    int64_t generator_length() const {
        return 2 * n_ + 1;
    }
    /// Generator centered on `site`.
    PhaseVector generator(int64_t site) const {
        return shifted(xi_, site);
    }

    friend TIStabilizerState validate_state(const PhaseVector &v);
    bool operator==(const TIStabilizerState &other) const {
        return xi_ == other.xi_;
    }

   private:
    TIStabilizerState(PhaseVector xi, int64_t n) : xi_(std::move(xi)), n_(n) {
    }
    PhaseVector xi_;
    int64_t n_;
};

/// Checks the pure-state conditions in order: symmetry about 0, non-identity
/// center, two distinct letter types (when n >= 1), coprime components.
inline TIStabilizerState validate_state(const PhaseVector &v) {
    if (!is_reflection_symmetric(v.plus, 0) || !is_reflection_symmetric(v.minus, 0)) {
        throw InvalidState(StateViolation::NotReflectionSymmetric, {},
                           to_observable_string(v) + " is not reflection symmetric about site 0");
    }
    if (letter_at(v, 0) == '1') {
        throw InvalidState(StateViolation::CenterIdentity, {}, to_observable_string(v) + " has identity at site 0");
    }
    int64_t n = dg(v);
    if (n >= 1 && (v.plus.is_zero() || v.minus.is_zero() || v.plus == v.minus)) {
        throw InvalidState(StateViolation::SingleLetterType, {},
                           to_observable_string(v) + " uses a single non-identity letter type");
    }
    LaurentPoly g = gcd(v.plus, v.minus);
    if (!g.is_one()) {
        throw InvalidState(StateViolation::CommonDivisor, g,
                           to_observable_string(v) + " has common divisor " + to_string(g));
    }
    return TIStabilizerState(v, n);
}

/// The product state stabilized by Z on every site.
inline TIStabilizerState all_spins_up() {
    return validate_state({{}, LaurentPoly::one()});
}

/// Element k is the state after k steps, k = 0..steps.
inline std::vector<TIStabilizerState> evolve(const TIStabilizerState &s, const ValidatedCqca &t, size_t steps) {
    std::vector<TIStabilizerState> out;
    out.reserve(steps + 1);
    out.push_back(s);
    PhaseVector xi = s.seed();
    for (size_t k = 0; k < steps; k++) {
        xi = apply(t, xi);
        out.push_back(validate_state(xi));
    }
    return out;
}

/// Ebits across any single cut.
inline int64_t bipartite_entanglement(const TIStabilizerState &s) {
    return s.n();
}

/// Ebits between a block of L consecutive sites and the rest of the chain.
inline int64_t tripartite_entanglement(const TIStabilizerState &s, int64_t region_length) {
    if (region_length <= 0) {
        throw std::invalid_argument("region length must be positive");
    }
    return std::min(2 * s.n(), region_length);
}

struct TrajectoryRow {
    size_t step = 0;
    int64_t n = 0;
    int64_t e_bi = 0;
    std::optional<int64_t> e_tri;
    bool operator==(const TrajectoryRow &) const = default;
};

inline std::vector<TrajectoryRow> entanglement_trajectory(const ValidatedCqca &t, const TIStabilizerState &s,
                                                          size_t steps,
                                                          std::optional<int64_t> region_length = std::nullopt) {
    std::vector<TrajectoryRow> rows;
    auto states = evolve(s, t, steps);
    rows.reserve(states.size());
    for (size_t k = 0; k < states.size(); k++) {
        TrajectoryRow row{k, states[k].n(), bipartite_entanglement(states[k]), std::nullopt};
        if (region_length) {
            row.e_tri = tripartite_entanglement(states[k], *region_length);
        }
        rows.push_back(row);
    }
    return rows;
}

/// CSV with header "t,n,E_bi,E_tri"; E_tri left empty without a region.
inline void write_trajectory_csv(std::ostream &out, const std::vector<TrajectoryRow> &rows) {
    out << "t,n,E_bi,E_tri\n";
    for (const auto &row : rows) {
        out << row.step << ',' << row.n << ',' << row.e_bi << ',';
        if (row.e_tri) {
            out << *row.e_tri;
        }
        out << '\n';
    }
}

struct RateEstimate {
    int64_t predicted = 0;
    // Empirical slope numerator / denominator, reduced.
    int64_t numerator = 0;
    int64_t denominator = 1;

    double empirical() const {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
};

/// Predicted rate dg tr t against the two-point slope of n over the second
/// half of a T-step run.
inline RateEstimate asymptotic_rate(const ValidatedCqca &t, const TIStabilizerState &s, size_t steps) {
    if (steps < 16) {
        throw std::invalid_argument("asymptotic_rate needs at least 16 steps");
    }
    auto states = evolve(s, t, steps);
    size_t half = steps / 2;
    int64_t num = states[steps].n() - states[half].n();
    int64_t den = static_cast<int64_t>(steps - half);
    int64_t g = std::gcd(num, den);
    return {trace_degree(t), num / g, den / g};
}

struct LogicalPair {
    PhaseVector x_bar;  // restriction to the right of the cut
    PhaseVector z_bar;
    PhaseVector x_full;  // the stabilizer products the restrictions came from
    PhaseVector z_full;
};

/// Maximally entangled logical pairs across the cut between sites cut_bond-1
/// and cut_bond.
///
/// The 2n generators straddling the cut are restricted to sites >= cut_bond
/// and paired by symplectic Gram-Schmidt: take the first remaining element,
/// pair it with the first later element it anticommutes with, and clear both
/// from every other element. Elements with no partner are dropped. Products
/// are carried on the full generators too, so each output pair still lies in
/// the stabilizer group.
inline std::vector<LogicalPair> extract_logical_pairs(const TIStabilizerState &s, int64_t cut_bond) {
    int64_t n = s.n();
    struct Item {
        PhaseVector full;
        PhaseVector part;
    };
    std::vector<Item> items;
    for (int64_t x = cut_bond - n; x <= cut_bond + n - 1; x++) {
        PhaseVector g = s.generator(x);
        items.push_back({g, restricted(g, cut_bond, x + n)});
    }
    auto add_into = [](Item &dst, const Item &src) {
        dst.full = compose_observables(dst.full, src.full);
        dst.part = compose_observables(dst.part, src.part);
    };

    std::vector<LogicalPair> pairs;
    while (!items.empty()) {
        Item a = items.front();
        items.erase(items.begin());
        auto partner = std::find_if(items.begin(), items.end(),
                                    [&](const Item &c) { return symplectic_form(a.part, c.part) == 1; });
        if (partner == items.end()) {
            continue;
        }
        Item b = *partner;
        items.erase(partner);
        for (Item &c : items) {
            int with_b = symplectic_form(c.part, b.part);
            int with_a = symplectic_form(c.part, a.part);
            if (with_b) {
                add_into(c, a);
            }
            if (with_a) {
                add_into(c, b);
            }
        }
        pairs.push_back({a.part, b.part, a.full, b.full});
    }
    return pairs;
}

}  // namespace cqca
