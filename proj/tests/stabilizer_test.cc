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

#include "cqca/stabilizer.hpp"

#include <sstream>

#include "cqca/finite_chain.hpp"
#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace cqca;

namespace {

TIStabilizerState S(std::string_view literal) {
    return validate_state(parse_observable(literal));
}

StateViolation violation_of(std::string_view literal) {
    try {
        S(literal);
    } catch (const InvalidState &e) {
        return e.violation();
    }
    ADD_FAILURE() << literal << " unexpectedly valid";
    return StateViolation::CommonDivisor;
}

std::vector<int64_t> n_values(const std::vector<TIStabilizerState> &states) {
    std::vector<int64_t> out;
    for (const auto &s : states) {
        out.push_back(s.n());
    }
    return out;
}

/// Rank over F2 of the symplectic Gram matrix of `vs`, by plain elimination on
/// a dense bool table.
size_t gram_rank(const std::vector<PhaseVector> &vs) {
    size_t m = vs.size();
    std::vector<std::vector<bool>> g(m, std::vector<bool>(m));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            g[i][j] = symplectic_form(vs[i], vs[j]) == 1;
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < m; col++) {
        size_t pivot = rank;
        while (pivot < m && !g[pivot][col]) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(g[pivot], g[rank]);
        for (size_t r = 0; r < m; r++) {
            if (r != rank && g[r][col]) {
                for (size_t c = 0; c < m; c++) {
                    g[r][c] = g[r][c] != g[rank][c];
                }
            }
        }
        rank++;
    }
    return rank;
}

const char *const SEEDS[] = {"Z@0", "X@0", "Y@0", "XZX@-1", "YXY@-1", "ZXZ@-1", "XZZZX@-2", "YXXXXXY@-3"};

}  // namespace

TEST(stabilizer, validate_state_examples) {
    ASSERT_EQ(S("XZX@-1").n(), 1);
    ASSERT_EQ(S("Z@0").n(), 0);
    ASSERT_EQ(S("Z@0"), all_spins_up());
    ASSERT_EQ(S("XZZZX@-2").n(), 2);
    ASSERT_EQ(S("YXXXXXY@-3").generator_length(), 7);
    ASSERT_EQ(violation_of("XX@0"), StateViolation::NotReflectionSymmetric);
    ASSERT_EQ(violation_of("XZX@0"), StateViolation::NotReflectionSymmetric);
    ASSERT_EQ(violation_of("X1X@-1"), StateViolation::CenterIdentity);
    ASSERT_EQ(violation_of("ZZZ@-1"), StateViolation::SingleLetterType);
    ASSERT_EQ(violation_of("YYY@-1"), StateViolation::SingleLetterType);
    ASSERT_EQ(violation_of("XZYZX@-2"), StateViolation::CommonDivisor);
    try {
        S("XZYZX@-2");
    } catch (const InvalidState &e) {
        ASSERT_EQ(e.common_divisor(), parse_poly("1 + u + u^2"));
    }
}

TEST(stabilizer, generators) {
    TIStabilizerState s = S("XZX@-1");
    ASSERT_EQ(s.generator(5), parse_observable("XZX@4"));
    ASSERT_EQ(symplectic_form(s.generator(0), s.generator(1)), 0);
}

TEST(stabilizer, evolve) {
    auto g = evolve(all_spins_up(), glider(), 2);
    ASSERT_EQ(g.size(), 3u);
    ASSERT_EQ(g[0].seed(), parse_observable("Z@0"));
    ASSERT_EQ(g[1].seed(), parse_observable("ZXZ@-1"));
    ASSERT_EQ(g[2].seed(), parse_observable("ZXZXZ@-2"));
    ASSERT_EQ(n_values(g), (std::vector<int64_t>{0, 1, 2}));

    auto f = evolve(all_spins_up(), fractal(), 2);
    ASSERT_EQ(f[1].seed(), parse_observable("X@0"));
    ASSERT_EQ(f[2].seed(), parse_observable("XYX@-1"));
    ASSERT_EQ(n_values(f), (std::vector<int64_t>{0, 0, 1}));

    for (const auto &s : evolve(S("YXY@-1"), ValidatedCqca::identity(), 4)) {
        ASSERT_EQ(s, S("YXY@-1"));
    }
}

TEST(stabilizer, entanglement_closed_forms) {
    ASSERT_EQ(bipartite_entanglement(S("YXY@-1")), 1);
    ASSERT_EQ(bipartite_entanglement(all_spins_up()), 0);
    ASSERT_EQ(bipartite_entanglement(S("YXXXXXY@-3")), 3);
    ASSERT_EQ(tripartite_entanglement(S("YXXXXXY@-3"), 30), 6);
    ASSERT_EQ(tripartite_entanglement(S("YXXXXXY@-3"), 4), 4);
    ASSERT_EQ(tripartite_entanglement(all_spins_up(), 17), 0);
    ASSERT_THROW(tripartite_entanglement(all_spins_up(), 0), std::invalid_argument);
}

TEST(stabilizer, trajectories) {
    auto e_bi = [](const std::vector<TrajectoryRow> &rows) {
        std::vector<int64_t> out;
        for (const auto &r : rows) {
            out.push_back(r.e_bi);
        }
        return out;
    };
    auto g = entanglement_trajectory(glider(), all_spins_up(), 5);
    ASSERT_EQ(e_bi(g), (std::vector<int64_t>{0, 1, 2, 3, 4, 5}));
    ASSERT_FALSE(g[0].e_tri.has_value());
    ASSERT_EQ(e_bi(entanglement_trajectory(fractal(), all_spins_up(), 3)), (std::vector<int64_t>{0, 0, 1, 2}));
    ASSERT_EQ(e_bi(entanglement_trajectory(ValidatedCqca::identity(), S("YXY@-1"), 3)),
              (std::vector<int64_t>{1, 1, 1, 1}));

    auto with_region = entanglement_trajectory(glider(), all_spins_up(), 3, 3);
    ASSERT_EQ(with_region[1].e_tri, std::optional<int64_t>(2));
    ASSERT_EQ(with_region[3].e_tri, std::optional<int64_t>(3));
}

TEST(stabilizer, trajectory_csv) {
    std::ostringstream a;
    write_trajectory_csv(a, entanglement_trajectory(glider(), all_spins_up(), 2));
    ASSERT_EQ(a.str(), "t,n,E_bi,E_tri\n0,0,0,\n1,1,1,\n2,2,2,\n");
    std::ostringstream b;
    write_trajectory_csv(b, entanglement_trajectory(glider(), all_spins_up(), 1, 1));
    ASSERT_EQ(b.str(), "t,n,E_bi,E_tri\n0,0,0,0\n1,1,1,1\n");
}

TEST(stabilizer, asymptotic_rate) {
    RateEstimate g = asymptotic_rate(glider(), all_spins_up(), 200);
    ASSERT_EQ(g.predicted, 1);
    ASSERT_EQ(g.numerator, 1);
    ASSERT_EQ(g.denominator, 1);

    RateEstimate p = asymptotic_rate(validate({{}, LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one()}),
                                     S("YXY@-1"), 99);
    ASSERT_EQ(p.predicted, 0);
    ASSERT_EQ(p.numerator, 0);

    RateEstimate f = asymptotic_rate(fractal(), all_spins_up(), 256);
    ASSERT_EQ(f.predicted, 1);
    ASSERT_NEAR(f.empirical(), 1.0, 0.1);

    ASSERT_THROW(asymptotic_rate(glider(), all_spins_up(), 15), std::invalid_argument);
}

TEST(stabilizer, logical_pairs_examples) {
    auto pairs = extract_logical_pairs(S("ZXZ@-1"), 0);
    ASSERT_EQ(pairs.size(), 1u);
    ASSERT_EQ(pairs[0].x_bar, parse_observable("Z@0"));
    ASSERT_EQ(pairs[0].z_bar, parse_observable("XZ@0"));
    ASSERT_EQ(symplectic_form(pairs[0].x_bar, pairs[0].z_bar), 1);

    ASSERT_TRUE(extract_logical_pairs(all_spins_up(), 3).empty());

    auto yxy = extract_logical_pairs(S("YXY@-1"), 0);
    ASSERT_EQ(yxy.size(), 1u);
    ASSERT_EQ(symplectic_form(yxy[0].x_bar, yxy[0].z_bar), 1);
}

TEST(stabilizer, logical_pairs_match_gram_rank) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 2);
        auto states = evolve(S(SEEDS[seed % std::size(SEEDS)]), t, seed % 5);
        const TIStabilizerState &s = states.back();
        int64_t cut = static_cast<int64_t>(seed % 7) - 3;
        auto pairs = extract_logical_pairs(s, cut);
        ASSERT_EQ(static_cast<int64_t>(pairs.size()), s.n());

        // Independent count: the restricted cut generators carry a symplectic
        // Gram matrix of full rank 2n exactly when n pairs exist.
        std::vector<PhaseVector> restricted_gens;
        for (int64_t x = cut - s.n(); x <= cut + s.n() - 1; x++) {
            restricted_gens.push_back(restricted(s.generator(x), cut, x + s.n()));
        }
        ASSERT_EQ(gram_rank(restricted_gens), static_cast<size_t>(2 * s.n()));

        for (size_t i = 0; i < pairs.size(); i++) {
            ASSERT_EQ(symplectic_form(pairs[i].x_bar, pairs[i].z_bar), 1);
            ASSERT_EQ(restricted(pairs[i].x_full, cut, dg(pairs[i].x_full)), pairs[i].x_bar);
            for (size_t j = 0; j < pairs.size(); j++) {
                if (i == j) {
                    continue;
                }
                ASSERT_EQ(symplectic_form(pairs[i].x_bar, pairs[j].x_bar), 0);
                ASSERT_EQ(symplectic_form(pairs[i].x_bar, pairs[j].z_bar), 0);
                ASSERT_EQ(symplectic_form(pairs[i].z_bar, pairs[j].z_bar), 0);
            }
        }
    }
}

TEST(stabilizer, evolution_preserves_validity) {
    for (uint64_t seed = 0; seed < 1000; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 1 + static_cast<int64_t>(seed % 2));
        PhaseVector xi = parse_observable(SEEDS[seed % std::size(SEEDS)]);
        size_t k = seed % 31;
        PhaseVector evolved = power(t, k).matrix() * xi;
        TIStabilizerState s = validate_state(evolved);
        ASSERT_EQ(s.n(), dg(evolved));
    }
}

TEST(stabilizer, monotone_bound) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 2);
        int64_t radius = t.matrix().max_entry_degree();
        auto states = evolve(all_spins_up(), t, 30);
        for (size_t k = 0; k + 1 < states.size(); k++) {
            ASSERT_LE(std::abs(states[k + 1].n() - states[k].n()), radius) << seed << " step " << k;
        }
    }
}

TEST(stabilizer, bipartite_matches_ring_entropy) {
    for (uint64_t seed = 0; seed < 60; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 4, 1);
        auto states = evolve(S(SEEDS[seed % std::size(SEEDS)]), t, seed % 4);
        const TIStabilizerState &s = states.back();
        size_t ring = static_cast<size_t>(4 * s.n() + 4);
        RingRegion half{seed % ring, ring / 2};
        ASSERT_EQ(static_cast<int64_t>(ring_state_entropy(s, ring, half)), 2 * bipartite_entanglement(s)) << seed;
    }
}
