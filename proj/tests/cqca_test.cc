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

#include "cqca/cqca.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include "cqca/matrix_io.hpp"
#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace cqca;

namespace {

LaurentPoly P(std::string_view text) {
    return parse_poly(text);
}

CqcaMatrix M(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return {P(a), P(b), P(c), P(d)};
}

SymplecticViolation violation_of(const CqcaMatrix &m) {
    try {
        validate(m);
    } catch (const InvalidCqca &e) {
        return e.violation();
    }
    ADD_FAILURE() << "matrix unexpectedly valid: " << m;
    return SymplecticViolation::PureShift;
}

CqcaMatrix period3_matrix() {
    return M("0", "1", "1", "1");
}

}  // namespace

TEST(cqca, validate_examples) {
    ValidatedCqca g = validate(M("0", "1", "1", "u^-1 + u"));
    ASSERT_EQ(g.class_tag(), CqcaClass::glider(1));
    ASSERT_EQ(g.trace(), P("u^-1 + u"));
    ValidatedCqca f = validate(M("u^-1 + 1 + u", "1", "1", "0"));
    ASSERT_EQ(f.class_tag(), CqcaClass::fractal());
    ASSERT_EQ(violation_of(M("1", "1", "1", "1")), SymplecticViolation::DetNotMonomial);
}

TEST(cqca, validate_errors) {
    ASSERT_EQ(violation_of(M("1 + u", "0", "0", "1")), SymplecticViolation::DetNotMonomial);
    ASSERT_EQ(violation_of(M("u", "0", "0", "1")), SymplecticViolation::DetOddShift);
    ASSERT_EQ(violation_of(M("1", "u", "0", "1")), SymplecticViolation::EntriesNotSymmetric);
    ASSERT_EQ(violation_of(M("u", "0", "0", "u")), SymplecticViolation::PureShift);
    ASSERT_EQ(violation_of(M("u^-1", "0", "0", "u^-1")), SymplecticViolation::PureShift);

    try {
        validate(M("1", "1", "1", "1"));
        FAIL();
    } catch (const InvalidCqca &e) {
        ASSERT_EQ(std::string(e.what()).rfind("DetNotMonomial", 0), 0u);
    }
    try {
        validate(M("u^2", "u^-1 + u^3", "0", "u^2"));
        FAIL();
    } catch (const InvalidCqca &e) {
        ASSERT_EQ(e.violation(), SymplecticViolation::EntriesNotSymmetric);
    }
}

TEST(cqca, shifted_matrices_are_centered) {
    ValidatedCqca g = validate(M("0", "u^2", "u^2", "u + u^3"));
    ASSERT_EQ(g.matrix(), glider_matrix());
    ValidatedCqca p = validate(M("0", "u", "u", "1 + u^2"));
    ASSERT_EQ(p.matrix(), M("0", "1", "1", "u^-1 + u"));
}

TEST(cqca, center) {
    ASSERT_EQ(center(M("u", "0", "0", "u"), 1), CqcaMatrix::identity());
    ASSERT_EQ(center(glider_matrix(), 0), glider_matrix());
    ASSERT_EQ(center(M("0", "u^2", "u^2", "u + u^3"), 2), glider_matrix());
    ASSERT_EQ(center(M("0", "u", "u", "1 + u^2"), 1), glider_matrix());
}

TEST(cqca, compose) {
    ValidatedCqca g2 = compose(glider(), glider());
    ASSERT_EQ(g2.matrix(), M("1", "u^-1 + u", "u^-1 + u", "1 + u^-2 + u^2"));
    ASSERT_EQ(g2.trace(), P("u^-2 + u^2"));
    ASSERT_EQ(g2.class_tag(), CqcaClass::glider(2));
    auto g2_oracle = oracle::mat_mul(oracle::mat(glider_matrix()), oracle::mat(glider_matrix()));
    ASSERT_EQ(oracle::poly(g2_oracle.t22), g2.matrix().t22);

    ASSERT_EQ(compose(fractal(), ValidatedCqca::identity()), fractal());
    ValidatedCqca s = validate(swap_matrix());
    ASSERT_EQ(compose(s, s), ValidatedCqca::identity());
}

TEST(cqca, inverse) {
    std::mt19937_64 rng(31);
    for (uint64_t seed = 0; seed < 200; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 2);
        ASSERT_EQ(compose(t, inverse(t)), ValidatedCqca::identity());
        ASSERT_EQ(compose(inverse(t), t), ValidatedCqca::identity());
    }
}

TEST(cqca, apply) {
    ASSERT_EQ(apply(glider(), parse_observable("X@0")), parse_observable("Z@0"));
    ASSERT_EQ(apply(glider(), parse_observable("Z@0")), parse_observable("ZXZ@-1"));
    PhaseVector zyx{P("1 + u"), P("u^-1 + 1")};
    ASSERT_EQ(zyx, parse_observable("ZYX@-1"));
    ASSERT_EQ(apply(glider(), zyx), parse_observable("ZYX@-2"));
}

TEST(cqca, classify) {
    ASSERT_EQ(classify(glider()), CqcaClass::glider(1));
    ASSERT_EQ(classify(fractal()), CqcaClass::fractal());
    ASSERT_EQ(classify(validate(period3_matrix())), CqcaClass::periodic());
    ASSERT_EQ(classify_trace(P("u^-3 + u^3")), CqcaClass::glider(3));
    ASSERT_EQ(classify_trace(P("u^-3 + 1 + u^3")), CqcaClass::fractal());
    ASSERT_EQ(classify_trace(LaurentPoly()), CqcaClass::periodic());
    ASSERT_EQ(to_string(CqcaClass::glider(1)), "Glider(1)");
    ASSERT_EQ(to_string(CqcaClass::fractal()), "Fractal");
    ASSERT_EQ(to_string(CqcaClass::periodic()), "Periodic");
}

TEST(cqca, period) {
    ValidatedCqca p = validate(period3_matrix());
    auto squared = oracle::mat_mul(oracle::mat(period3_matrix()), oracle::mat(period3_matrix()));
    ASSERT_EQ(oracle::poly(squared.t11), P("1"));
    ASSERT_EQ(oracle::poly(squared.t12), P("1"));
    ASSERT_EQ(oracle::poly(squared.t21), P("1"));
    ASSERT_TRUE(squared.t22.empty());
    ASSERT_EQ(period(p, 10), std::optional<uint64_t>(3));
    ASSERT_EQ(period(p, 2), std::nullopt);
    ASSERT_EQ(period(ValidatedCqca::identity(), 5), std::optional<uint64_t>(1));
    ASSERT_EQ(period(validate(swap_matrix()), 5), std::optional<uint64_t>(2));
    ASSERT_EQ(period(glider(), 64), std::nullopt);
    ASSERT_EQ(period(fractal(), 64), std::nullopt);
}

TEST(cqca, trace_degree) {
    ASSERT_EQ(trace_degree(glider()), 1);
    ASSERT_EQ(trace_degree(fractal()), 1);
    ASSERT_EQ(trace_degree(compose(glider(), glider())), 2);
    ASSERT_EQ(trace_degree(validate(period3_matrix())), 0);
    ASSERT_EQ(trace_degree(validate(swap_matrix())), 0);
}

TEST(cqca, words) {
    std::vector<WordFactor> word{WordFactor::lower_shear(P("u^-1 + u")), WordFactor::swap()};
    ASSERT_EQ(from_word(word), glider());
    ASSERT_EQ(from_word(std::vector<WordFactor>{}), ValidatedCqca::identity());
    ASSERT_EQ(random_cqca(5, 0, 2), ValidatedCqca::identity());
    ASSERT_EQ(random_cqca(99, 6, 2), random_cqca(99, 6, 2));
}

TEST(cqca, random_cqca_always_validates) {
    for (uint64_t seed = 0; seed < 1000; seed++) {
        auto word = random_word(seed, 1 + seed % 8, 1 + static_cast<int64_t>(seed % 3));
        CqcaMatrix m = CqcaMatrix::identity();
        for (const auto &f : word) {
            ASSERT_TRUE(is_reflection_symmetric(f.p, 0));
            m = m * f.matrix();
        }
        ValidatedCqca t = validate(m);
        ASSERT_EQ(t.matrix(), m);
        ASSERT_TRUE(t.matrix().det().is_one());
    }
}

TEST(cqca, symplectic_preservation_and_linearity) {
    std::mt19937_64 rng(37);
    for (uint64_t seed = 0; seed < 1000; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 2);
        PhaseVector a = oracle::random_vector(rng, -5, 5);
        PhaseVector b = oracle::random_vector(rng, -5, 5);
        ASSERT_EQ(symplectic_form(apply(t, a), apply(t, b)), symplectic_form(a, b));
        ASSERT_EQ(apply(t, compose_observables(a, b)), compose_observables(apply(t, a), apply(t, b)));
        auto [plus, minus] = oracle::mat_vec(oracle::mat(t.matrix()), oracle::terms(a.plus), oracle::terms(a.minus));
        ASSERT_EQ(apply(t, a), (PhaseVector{oracle::poly(plus), oracle::poly(minus)}));
    }
}

TEST(cqca, cayley_hamilton) {
    for (uint64_t seed = 0; seed < 1000; seed++) {
        ValidatedCqca t = random_cqca(seed, 1 + seed % 6, 2);
        auto m = oracle::mat(t.matrix());
        auto sq = oracle::mat_mul(m, m);
        auto tr = oracle::add(m.t11, m.t22);
        auto one = oracle::Terms{0};
        ASSERT_TRUE(oracle::add(oracle::add(sq.t11, oracle::mul(tr, m.t11)), one).empty());
        ASSERT_TRUE(oracle::add(sq.t12, oracle::mul(tr, m.t12)).empty());
        ASSERT_TRUE(oracle::add(sq.t21, oracle::mul(tr, m.t21)).empty());
        ASSERT_TRUE(oracle::add(oracle::add(sq.t22, oracle::mul(tr, m.t22)), one).empty());
    }
}

TEST(cqca, glider_powers) {
    for (uint64_t k = 1; k <= 12; k++) {
        ASSERT_EQ(power(glider(), k).class_tag(), CqcaClass::glider(static_cast<int64_t>(k)));
        ASSERT_EQ(power(glider(), k).matrix().det(), LaurentPoly::one());
    }
    ValidatedCqca g3 = power(glider(), 3);
    ValidatedCqca g2 = power(glider(), 2);
    ASSERT_EQ(power(g3, 2).class_tag(), CqcaClass::glider(6));
    ASSERT_EQ(power(g2, 5), power(glider(), 10));
}

TEST(matrix_io, parse_matrix_text) {
    CqcaMatrix m = parse_matrix_text(
        "# the glider\n"
        "t11 = 0\n"
        "t12: 1\n"
        "  t21 = 1  \n"
        "\n"
        "t22 = u^-1 + u # trailing comment\n");
    ASSERT_EQ(m, glider_matrix());
    ASSERT_THROW(parse_matrix_text("t11 = 0\nt12 = 1\nt21 = 1\n"), std::invalid_argument);
    ASSERT_THROW(parse_matrix_text("t11 = 0\nt11 = 1\nt12 = 1\nt21 = 1\nt22 = 0\n"), std::invalid_argument);
    ASSERT_THROW(parse_matrix_text("t11 = 0\nt12 = 1\nt21 = 1\nt22 = 0\nt33 = 1\n"), std::invalid_argument);
    ASSERT_THROW(parse_matrix_text("t11 = 0\nt12 = 1\nt21 = 1\nt22 = u^\n"), std::invalid_argument);
    ASSERT_EQ(parse_matrix_text(to_matrix_text(fractal_matrix())), fractal_matrix());
}

TEST(matrix_io, resolve_matrix) {
    ASSERT_EQ(resolve_matrix("glider"), glider_matrix());
    ASSERT_EQ(resolve_matrix("fractal"), fractal_matrix());
    ASSERT_EQ(resolve_matrix("identity"), CqcaMatrix::identity());
    ASSERT_EQ(resolve_matrix("swap"), swap_matrix());
    ASSERT_EQ(resolve_matrix("shear:u^-1 + u"), M("1", "0", "u^-1 + u", "1"));
    ASSERT_EQ(resolve_matrix("ushear:1"), M("1", "1", "0", "1"));
    ASSERT_EQ(resolve_matrix("shear:u^-1+u * swap"), glider_matrix());
    ASSERT_EQ(resolve_matrix("glider*glider"), compose(glider(), glider()).matrix());
    ASSERT_THROW(resolve_matrix("glider*bogus"), std::invalid_argument);
    ASSERT_THROW(resolve_matrix("/nonexistent/matrix.txt"), std::invalid_argument);

    std::string path = ::testing::TempDir() + "cqca_matrix_io_test.txt";
    {
        std::ofstream out(path);
        out << to_matrix_text(glider_matrix());
    }
    ASSERT_EQ(resolve_matrix(path), glider_matrix());
    std::remove(path.c_str());
}
