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

// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqca/all.hpp"

namespace cqca::cli {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_INVALID = 1;
inline constexpr int EXIT_USAGE = 2;

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline CqcaMatrix matrix_from_args(const std::string &source, const std::optional<std::string> (&entries)[4]) {
    bool any_entry = entries[0] || entries[1] || entries[2] || entries[3];
    if (any_entry) {
        if (!source.empty()) {
            throw UsageError("give either a matrix source or --t11/--t12/--t21/--t22, not both");
        }
        for (int k = 0; k < 4; k++) {
            if (!entries[k]) {
                static const char *names[] = {"--t11", "--t12", "--t21", "--t22"};
                throw UsageError(std::string("missing ") + names[k]);
            }
        }
        return {parse_poly(*entries[0]), parse_poly(*entries[1]), parse_poly(*entries[2]), parse_poly(*entries[3])};
    }
    if (source.empty()) {
        throw UsageError("missing matrix source (built-in name or file path)");
    }
    return resolve_matrix(source);
}

inline std::string period_text(const ValidatedCqca &t, uint64_t cap) {
    auto p = period(t, cap);
    return p ? std::to_string(*p) : "NotPeriodicWithin(" + std::to_string(cap) + ")";
}

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace detail

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford quantum cellular automaton laboratory"};
    app.require_subcommand(1);

    std::string source;
    std::optional<std::string> entries[4];
    std::string observable = "Z@0";
    std::string state = "Z@0";
    size_t steps = 0;
    std::optional<int64_t> region;
    uint64_t cap = 64;
    std::string format = "ascii";
    std::string output;
    size_t sites = 7;
    std::string boundary = "open";
    int64_t label_offset = 0;
    bool mirror = false;
    OracleConfig oracle;
    std::optional<uint64_t> seed;

    auto add_matrix = [&](CLI::App *sub, bool with_entries) {
        sub->add_option("matrix", source, "built-in name (glider, fractal, identity, swap, shear:<poly>), "
                                          "'*'-joined product of built-ins, or matrix file");
        if (with_entries) {
            sub->add_option("--t11", entries[0], "entry t11");
            sub->add_option("--t12", entries[1], "entry t12");
            sub->add_option("--t21", entries[2], "entry t21");
            sub->add_option("--t22", entries[3], "entry t22");
        }
    };

    auto *validate_cmd = app.add_subcommand("validate", "check the symplectic conditions and report the class");
    add_matrix(validate_cmd, true);

    auto *classify_cmd = app.add_subcommand("classify", "trace, class, trace degree and period");
    add_matrix(classify_cmd, true);
    classify_cmd->add_option("--cap", cap, "period search cap");

    auto *evolve_cmd = app.add_subcommand("evolve", "observable trajectory");
    add_matrix(evolve_cmd, false);
    evolve_cmd->add_option("--observable", observable, "observable literal, e.g. ZYX@-1");
    evolve_cmd->add_option("--steps", steps, "number of steps")->required();

    auto *diagram_cmd = app.add_subcommand("diagram", "space-time diagram");
    add_matrix(diagram_cmd, false);
    diagram_cmd->add_option("--observable", observable, "initial observable");
    diagram_cmd->add_option("--steps", steps, "number of steps")->required();
    diagram_cmd->add_option("--format", format, "ascii or ppm")->check(CLI::IsMember({"ascii", "ppm"}));
    diagram_cmd->add_option("--output", output, "output file (default stdout)");

    auto *entangle_cmd = app.add_subcommand("entangle", "entanglement trajectory as CSV");
    add_matrix(entangle_cmd, false);
    entangle_cmd->add_option("--state", state, "stabilizer seed literal");
    entangle_cmd->add_option("--steps", steps, "number of steps")->required();
    entangle_cmd->add_option("--region", region, "region length L for the tripartite column")
        ->check(CLI::PositiveNumber);

    auto *rate_cmd = app.add_subcommand("rate", "predicted versus empirical entanglement rate");
    add_matrix(rate_cmd, false);
    rate_cmd->add_option("--state", state, "stabilizer seed literal");
    rate_cmd->add_option("--steps", steps, "run length T (>= 16)")->required();

    auto *finite_cmd = app.add_subcommand("finite", "phase-exact simulation on a finite chain or ring");
    add_matrix(finite_cmd, false);
    finite_cmd->add_option("--sites", sites, "chain length N");
    finite_cmd->add_option("--boundary", boundary, "open or ring")->check(CLI::IsMember({"open", "ring"}));
    finite_cmd->add_option("--observable", observable, "observable literal in site labels");
    finite_cmd->add_option("--label-offset", label_offset, "label of site 0 (e.g. -3 for sites -3..3)");
    finite_cmd->add_option("--steps", steps, "number of steps");
    finite_cmd->add_flag("--mirror", mirror, "print the mirror time of every single-site Pauli");

    auto *oracle_cmd = app.add_subcommand("oracle", "symbolic versus ring equivalence sweep");
    oracle_cmd->add_option("--seed", seed, "base seed")->required();
    oracle_cmd->add_option("--samples", oracle.samples, "number of random automata");
    oracle_cmd->add_option("--word-length", oracle.max_word_length, "maximum generator word length");
    oracle_cmd->add_option("--shear-degree", oracle.max_shear_degree, "maximum shear degree");
    oracle_cmd->add_option("--ring", oracle.ring_size, "ring size N");
    oracle_cmd->add_option("--steps", oracle.steps, "steps per automaton");
    oracle_cmd->add_option("--regions", oracle.region_sizes, "region sizes per step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        if (validate_cmd->parsed()) {
            CqcaMatrix m = detail::matrix_from_args(source, entries);
            try {
                ValidatedCqca t = validate(m);
                out << "valid, class=" << to_string(t.class_tag()) << ", tr=" << to_compact_string(t.trace()) << "\n";
            } catch (const InvalidCqca &e) {
                out << e.what() << "\n";
                return EXIT_INVALID;
            }
            return EXIT_OK;
        }

        // Every other matrix-consuming subcommand needs a valid automaton.
        auto load = [&](bool with_entries) {
            std::optional<std::string> none[4];
            return validate(detail::matrix_from_args(source, with_entries ? entries : none));
        };

        if (classify_cmd->parsed()) {
            ValidatedCqca t = load(true);
            out << "class=" << to_string(t.class_tag()) << "\n";
            out << "trace=" << to_compact_string(t.trace()) << "\n";
            out << "trace_degree=" << trace_degree(t) << "\n";
            out << "period=" << detail::period_text(t, cap) << "\n";
            return EXIT_OK;
        }
        if (evolve_cmd->parsed()) {
            ValidatedCqca t = load(false);
            PhaseVector v = parse_observable(observable);
            for (size_t k = 0; k <= steps; k++) {
                out << k << " " << to_observable_string(v) << "\n";
                v = apply(t, v);
            }
            return EXIT_OK;
        }
        if (diagram_cmd->parsed()) {
            ValidatedCqca t = load(false);
            SpaceTimeDiagram d = build_diagram(t, parse_observable(observable), steps);
            DiagramFormat fmt = format == "ppm" ? DiagramFormat::Ppm : DiagramFormat::Ascii;
            std::string bytes = emit(d, fmt);
            if (fmt == DiagramFormat::Ascii) {
                bytes += '\n';
            }
            if (output.empty()) {
                out << bytes;
            } else {
                std::ofstream file(output, std::ios::binary);
                if (!file) {
                    throw detail::UsageError("cannot open --output " + output);
                }
                file << bytes;
            }
            return EXIT_OK;
        }
        if (entangle_cmd->parsed()) {
            ValidatedCqca t = load(false);
            TIStabilizerState s = validate_state(parse_observable(state));
            write_trajectory_csv(out, entanglement_trajectory(t, s, steps, region));
            return EXIT_OK;
        }
        if (rate_cmd->parsed()) {
            ValidatedCqca t = load(false);
            TIStabilizerState s = validate_state(parse_observable(state));
            if (steps < 16) {
                throw detail::UsageError("--steps must be at least 16");
            }
            RateEstimate r = asymptotic_rate(t, s, steps);
            out << "predicted=" << r.predicted << "\n";
            out << "empirical=" << r.numerator << "/" << r.denominator << " (" << detail::fixed6(r.empirical())
                << ")\n";
            return EXIT_OK;
        }
        if (finite_cmd->parsed()) {
            ValidatedCqca t = load(false);
            FiniteRule rule = truncate_rule(t, sites, boundary == "ring" ? Boundary::Ring : Boundary::Open);
            if (mirror) {
                if (rule.boundary != Boundary::Open) {
                    throw detail::UsageError("--mirror needs --boundary open");
                }
                out << "label letter mirror_step\n";
                for (size_t site = 0; site < sites; site++) {
                    for (char letter : {'X', 'Y', 'Z'}) {
                        auto m = mirror_time(rule, site, letter);
                        out << static_cast<int64_t>(site) + label_offset << " " << letter << " "
                            << (m ? std::to_string(*m)
                                  : "NotMirroredWithin(" + std::to_string(mirror_search_cap(rule)) + ")")
                            << "\n";
                    }
                }
                return EXIT_OK;
            }
            PauliString p = parse_pauli_string(observable);
            FiniteOperator op(sites);
            for (size_t k = 0; k < p.letters.size(); k++) {
                int64_t site = p.offset + static_cast<int64_t>(k) - label_offset;
                if (site < 0 || site >= static_cast<int64_t>(sites)) {
                    if (p.letters[k] != '1' && p.letters[k] != 'I') {
                        throw detail::UsageError("--observable reaches outside the chain");
                    }
                    continue;
                }
                op.set_letter(static_cast<size_t>(site), p.letters[k]);
            }
            out << "step operator global_y_parity\n";
            auto ops = evolve_finite(rule, op, steps);
            for (size_t k = 0; k < ops.size(); k++) {
                out << k << " " << to_string(ops[k]) << " " << (global_y_parity(ops[k]) > 0 ? "+1" : "-1") << "\n";
            }
            return EXIT_OK;
        }
        if (oracle_cmd->parsed()) {
            oracle.seed = *seed;
            OracleReport report = oracle_sweep(oracle);
            for (const auto &m : report.mismatches) {
                out << "mismatch sample=" << m.sample << " step=" << m.step << " region=" << m.region.start << "+"
                    << m.region.length << " predicted=" << m.predicted << " ring=" << m.ring
                    << " symbolic_ring=" << m.symbolic_ring << "\n";
            }
            out << "comparisons=" << report.comparisons << " skipped_steps=" << report.skipped_steps
                << " skipped_samples=" << report.skipped_samples << " mismatches=" << report.mismatches.size()
                << "\n";
            return report.mismatches.empty() ? EXIT_OK : EXIT_INVALID;
        }
    } catch (const detail::UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const InvalidCqca &e) {
        out << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const InvalidState &e) {
        out << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const FiniteChainError &e) {
        out << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}

}  // namespace cqca::cli
