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

/// Symbolic-versus-ring equivalence sweep.
///
/// For each sampled automaton the all-spins-up ring state is evolved twice:
/// symbolically (seed polynomials, closed-form min(2n, |R|)) and explicitly
/// (every ring generator Z_x pushed through the wrapped finite rule, entropy
/// from F2 ranks). Any disagreement is reported.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cqca/cqca.hpp"
#include "cqca/finite_chain.hpp"
#include "cqca/stabilizer.hpp"

namespace cqca {

struct OracleConfig {
    uint64_t seed = 0;
    size_t samples = 50;
    size_t max_word_length = 6;
    int64_t max_shear_degree = 2;
    size_t ring_size = 64;
    size_t steps = 20;
    size_t region_sizes = 5;
};

struct OracleMismatch {
    size_t sample = 0;
    size_t step = 0;
    RingRegion region;
    int64_t predicted = 0;
    int64_t ring = 0;
    int64_t symbolic_ring = 0;
};

struct OracleReport {
    size_t comparisons = 0;
    size_t skipped_steps = 0;    // steps with no admissible region (4n + 2 > N)
    size_t skipped_samples = 0;  // automata too wide to wrap on the ring
    std::vector<OracleMismatch> mismatches;
};

/// Region sizes spread evenly over [max(1, 2n), N - 2n - 2]; empty if that range is.
inline std::vector<size_t> admissible_region_sizes(int64_t n, size_t ring_size, size_t count) {
    int64_t lo = std::max<int64_t>(1, 2 * n);
    int64_t hi = static_cast<int64_t>(ring_size) - 2 * n - 2;
    std::vector<size_t> out;
    if (hi < lo || count == 0) {
        return out;
    }
    for (size_t j = 0; j < count; j++) {
        int64_t size = count == 1 ? lo : lo + (hi - lo) * static_cast<int64_t>(j) / static_cast<int64_t>(count - 1);
        if (out.empty() || out.back() != static_cast<size_t>(size)) {
            out.push_back(static_cast<size_t>(size));
        }
    }
    return out;
}

/// Sample s uses seed config.seed + s and word length 1 + (s mod max_word_length).
inline OracleReport oracle_sweep(const OracleConfig &config) {
    OracleReport report;
    size_t n_sites = config.ring_size;
    for (size_t s = 0; s < config.samples; s++) {
        size_t word_length = 1 + s % std::max<size_t>(1, config.max_word_length);
        ValidatedCqca t = random_cqca(config.seed + s, word_length, config.max_shear_degree);
        if (2 * t.matrix().neighborhood_radius() >= static_cast<int64_t>(n_sites)) {
            report.skipped_samples++;
            continue;
        }
        FiniteRule rule = truncate_rule(t, n_sites, Boundary::Ring);
        std::vector<FiniteOperator> ring_gens;
        for (size_t x = 0; x < n_sites; x++) {
            ring_gens.push_back(FiniteOperator::single(n_sites, x, 'Z'));
        }
        auto states = evolve(all_spins_up(), t, config.steps);
        for (size_t k = 0; k <= config.steps; k++) {
            if (k > 0) {
                for (auto &g : ring_gens) {
                    g = rule.apply(g);
                }
            }
            int64_t n = states[k].n();
            auto sizes = admissible_region_sizes(n, n_sites, config.region_sizes);
            if (sizes.empty()) {
                report.skipped_steps++;
                continue;
            }
            for (size_t size : sizes) {
                RingRegion region{(s + 5 * k) % n_sites, size};
                auto sites = region.sites(n_sites);
                int64_t ring = static_cast<int64_t>(stabilizer_entropy(ring_gens, sites));
                int64_t symbolic_ring = static_cast<int64_t>(ring_state_entropy(states[k], n_sites, region));
                int64_t predicted = tripartite_entanglement(states[k], static_cast<int64_t>(size));
                report.comparisons++;
                if (ring != predicted || symbolic_ring != predicted) {
                    report.mismatches.push_back({s, k, region, predicted, ring, symbolic_ring});
                }
            }
        }
    }
    return report;
}

}  // namespace cqca
