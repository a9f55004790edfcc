/*
   Copyright 2026 The ratmap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "ratmap/expr.hpp"
#include "ratmap/poly.hpp"

using namespace ratmap;

namespace {

const RingTag Z = RingTag::integers();
const auto ZX = upoly_ring(Z);

UPoly P(const char* s, const RingTag& r = Z) { return parse_upoly(s, r); }

UPoly random_poly(std::mt19937_64& rng, const RingTag& r, std::size_t max_deg) {
    std::uniform_int_distribution<int> deg(0, static_cast<int>(max_deg)), c(-9, 9);
    std::vector<Scalar> cs;
    for (int k = deg(rng); k >= 0; --k) cs.push_back(Scalar(r, c(rng)));
    return UPoly(upoly_ring(r), cs);
}

TEST(PolyTest, DegreeOfZeroAndPaddedPolynomials) {
    UPoly zero(ZX);
    EXPECT_FALSE(zero.degree().has_value());
    EXPECT_FALSE(zero.formal_degree().has_value());
    UPoly padded = P("X + 1").padded(4);
    EXPECT_EQ(padded.formal_degree(), 4u);
    EXPECT_EQ(padded.degree(), 1u);
    EXPECT_EQ(padded, P("X + 1"));
    EXPECT_FALSE(identical(padded, P("X + 1")));
    EXPECT_TRUE(identical(padded.trimmed(), P("X + 1")));
    EXPECT_THROW(P("X^3").padded(2), DomainError);
}

TEST(PolyTest, ArithmeticMatchesHandComputation) {
    EXPECT_EQ(P("(X - 1)*(X + 1)"), P("X^2 - 1"));
    EXPECT_EQ(P("X^2 - X + 1") * P("X - 1") + P("X"), P("X^3 - 2*X^2 + 3*X - 1"));
    EXPECT_EQ(P("X + 2").pow(3), P("X^3 + 6*X^2 + 12*X + 8"));
    EXPECT_EQ(P("X^2 + 1").compose(P("X - 1")), P("X^2 - 2*X + 2"));
    EXPECT_EQ(P("2*X^2 - 3").evaluate(Scalar(Z, 5)), Scalar(Z, 47));
}

TEST(PolyTest, ExactDivision) {
    EXPECT_EQ(exact_div(P("X^3 - 1"), P("X - 1")), P("X^2 + X + 1"));
    EXPECT_THROW(exact_div(P("X^3 - 1"), P("X - 2")), InexactDivision);
    EXPECT_THROW(exact_div(P("X^2"), P("2*X")), InexactDivision);
    RingTag Q = RingTag::rationals();
    EXPECT_EQ(exact_div(P("X^2", Q), P("2*X", Q)), P("(1/2)*X", Q));
}

TEST(PolyTest, UnitsAreUnitConstants) {
    EXPECT_TRUE(is_unit(P("-1")));
    EXPECT_FALSE(is_unit(P("2")));
    EXPECT_FALSE(is_unit(P("X")));
    EXPECT_TRUE(is_unit(P("2", RingTag::prime_field(5))));
}

TEST(PolyTest, DifferentVariablesDoNotMix) {
    UPoly x = P("X");
    UPoly t = parse_upoly("T", Z, "T");
    EXPECT_THROW(x + t, RingMismatch);
    EXPECT_THROW(x * P("X", RingTag::rationals()), RingMismatch);
}

TEST(PolyTest, RingAxiomsOnRandomPolynomials) {
    std::mt19937_64 rng(11);
    for (const RingTag& r : {Z, RingTag::rationals(), RingTag::prime_field(7)}) {
        for (int trial = 0; trial < 200; ++trial) {
            UPoly a = random_poly(rng, r, 5), b = random_poly(rng, r, 5), c = random_poly(rng, r, 5);
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a - a, UPoly(upoly_ring(r)));
        }
    }
}

TEST(PolyTest, EvaluationIsARingHomomorphism) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> pt(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        UPoly a = random_poly(rng, Z, 6), b = random_poly(rng, Z, 6);
        Scalar x(Z, pt(rng));
        ASSERT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
        ASSERT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
        ASSERT_EQ(a.compose(b).evaluate(x), a.evaluate(b.evaluate(x)));
    }
}

TEST(PolyTest, PaddingDoesNotChangeValue) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        UPoly a = random_poly(rng, Z, 4);
        UPoly p = a.padded(7);
        ASSERT_EQ(p, a);
        ASSERT_EQ(p.evaluate(Scalar(Z, 3)), a.evaluate(Scalar(Z, 3)));
        ASSERT_EQ(p.degree(), a.degree());
    }
}

TEST(HomotopyPolyTest, SpecializeAndSubstitute) {
    HomotopyPoly F = parse_homotopy_poly("X^2 + 2*T*X + 2*T", Z);
    EXPECT_EQ(specialize(F, Scalar(Z, 0)), P("X^2"));
    EXPECT_EQ(specialize(F, Scalar(Z, 1)), P("X^2 + 2*X + 2"));
    HomotopyPoly R = substitute_inner(F, parse_upoly("1 - T", Z, "T"));
    EXPECT_EQ(specialize(R, Scalar(Z, 0)), P("X^2 + 2*X + 2"));
    EXPECT_EQ(specialize(R, Scalar(Z, 1)), P("X^2"));
    EXPECT_EQ(specialize(lift_constant_in_t(P("X - 3")), Scalar(Z, 9)), P("X - 3"));
}

TEST(HomotopyPolyTest, SpecializationCommutesWithArithmetic) {
    HomotopyPoly a = parse_homotopy_poly("X^2 - T*X + T", Z);
    HomotopyPoly b = parse_homotopy_poly("X + 2*T - 1", Z);
    for (int t = -3; t <= 3; ++t) {
        Scalar s(Z, t);
        ASSERT_EQ(specialize(a * b, s), specialize(a, s) * specialize(b, s));
        ASSERT_EQ(specialize(a - b, s), specialize(a, s) - specialize(b, s));
    }
}

}  // namespace
