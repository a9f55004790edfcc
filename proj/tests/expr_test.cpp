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

using namespace ratmap;

namespace {

const RingTag Z = RingTag::integers();
const RingTag Q = RingTag::rationals();

std::size_t error_position(auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "expected a ParseError";
    return 0;
}

TEST(ParseTest, CoefficientsOfAQuadratic) {
    UPoly p = parse_upoly("X^2 - X + 1", Z);
    ASSERT_EQ(p.coeffs().size(), 3u);
    EXPECT_EQ(p.coeff(0), Scalar(Z, 1));
    EXPECT_EQ(p.coeff(1), Scalar(Z, -1));
    EXPECT_EQ(p.coeff(2), Scalar(Z, 1));
}

TEST(ParseTest, HomotopyPolynomialInTwoVariables) {
    HomotopyPoly p = parse_homotopy_poly("T*X + 1", Z);
    EXPECT_EQ(p.degree(), 1u);
    EXPECT_EQ(p.coeff(1), parse_upoly("T", Z, "T"));
    EXPECT_EQ(print_poly(p), "T*X + 1");
}

TEST(ParseTest, ExpandsSquareOfPlaneBinomial) {
    std::vector<std::string> vars = {"T0", "T1", "T"};
    MPoly p = parse_mpoly("(T0 + T*T1)^2", vars);
    EXPECT_EQ(p, parse_mpoly("T0^2 + 2*T*T0*T1 + T^2*T1^2", vars));
    EXPECT_EQ(print_poly(p), "T0^2 + 2*T0*T1*T + T1^2*T^2");
}

TEST(ParseTest, PrecedenceAndUnaryMinus) {
    EXPECT_EQ(parse_upoly("2*X^2", Z), parse_upoly("2*(X^2)", Z));
    EXPECT_EQ(parse_upoly("-X^2", Z), parse_upoly("-(X^2)", Z));
    EXPECT_EQ(parse_upoly("1 - -X", Z), parse_upoly("1 + X", Z));
    EXPECT_EQ(parse_upoly("  X*  X  ", Z), parse_upoly("X^2", Z));
    EXPECT_EQ(parse_upoly("X^0", Z), parse_upoly("1", Z));
}

TEST(ParseTest, UnboundedIntegerLiterals) {
    UPoly p = parse_upoly("100000000000000000000000000000*X", Z);
    EXPECT_EQ(p.coeff(1).to_string(), "100000000000000000000000000000");
}

TEST(ParseTest, FractionLiteralsOnlyOverFields) {
    EXPECT_EQ(parse_upoly("(1/2)*X", Q).coeff(1), Scalar::fraction(Q, 1, 2));
    EXPECT_EQ(parse_upoly("(-3/4)", Q).coeff(0), Scalar::fraction(Q, -3, 4));
    EXPECT_EQ(parse_upoly("(1/2)", RingTag::prime_field(7)).coeff(0), Scalar(RingTag::prime_field(7), 4));
    EXPECT_THROW(parse_upoly("(1/2)*X", Z), ParseError);
    EXPECT_THROW(parse_upoly("(1/0)", Q), ParseError);
}

TEST(ParseTest, PrimeFieldReducesCoefficients) {
    EXPECT_EQ(parse_upoly("8*X + 15", RingTag::prime_field(7)), parse_upoly("X + 1", RingTag::prime_field(7)));
}

TEST(ParseTest, ErrorsCarryPositions) {
    EXPECT_EQ(error_position([] { parse_upoly("X + Y", Z); }), 4u);
    EXPECT_EQ(error_position([] { parse_upoly("2X", Z); }), 1u);
    EXPECT_EQ(error_position([] { parse_upoly("X +", Z); }), 3u);
    EXPECT_EQ(error_position([] { parse_upoly("(X + 1", Z); }), 6u);
    EXPECT_EQ(error_position([] { parse_upoly("X^-1", Z); }), 2u);
    EXPECT_EQ(error_position([] { parse_upoly("X # 1", Z); }), 2u);
    EXPECT_EQ(error_position([] { parse_upoly("T", Z); }), 0u);
    EXPECT_EQ(error_position([] { parse_upoly("X^5000", Z); }), 2u);
    EXPECT_EQ(error_position([] { parse_upoly("", Z); }), 0u);
}

TEST(ParseTest, PairsSplitAtTopLevelSlash) {
    auto [f, g] = parse_upoly_pair("(X^2 - X + 1)/(X - 1)", Z);
    EXPECT_EQ(f, parse_upoly("X^2 - X + 1", Z));
    EXPECT_EQ(g, parse_upoly("X - 1", Z));
    auto [fq, gq] = parse_upoly_pair("((1/2)*X)/1", Q);
    EXPECT_EQ(fq.coeff(1), Scalar::fraction(Q, 1, 2));
    EXPECT_THROW(parse_upoly_pair("X^2", Z), ParseError);
    EXPECT_THROW(parse_upoly_pair("X/1/1", Z), ParseError);
    EXPECT_EQ(error_position([] { parse_upoly_pair("X/(X + Y)", Z); }), 7u);
}

TEST(PrintTest, CanonicalOrder) {
    EXPECT_EQ(print_poly(UPoly::from_integers(upoly_ring(Z), {1, -1, 1})), "X^2 - X + 1");
    EXPECT_EQ(print_poly(UPoly(upoly_ring(Z))), "0");
    EXPECT_EQ(print_poly(parse_upoly("-2*X^3 + 5", Z)), "-2*X^3 + 5");
    EXPECT_EQ(print_poly(parse_upoly("(-1/2)*X + (1/3)", Q)), "-(1/2)*X + (1/3)");
    EXPECT_EQ(print_poly(parse_homotopy_poly("X^2 + 2*T*X + 2*T", Z)), "X^2 + 2*T*X + 2*T");
    EXPECT_EQ(print_poly(parse_homotopy_poly("(T - T^2)*X", Z)), "-T^2*X + T*X");
}

TEST(PrintTest, Fractions) {
    auto ring = upoly_ring(Z);
    EXPECT_EQ(print_fraction(parse_upoly("X^2 - X + 1", Z), parse_upoly("X - 1", Z)), "(X^2 - X + 1)/(X - 1)");
    EXPECT_EQ(print_fraction(parse_upoly("X", Z), UPoly::constant(ring, Scalar(Z, 1))), "X/1");
    EXPECT_EQ(print_fraction(parse_upoly("X - 1", Z), UPoly::constant(ring, Scalar(Z, -1))), "(X - 1)/(-1)");
}

TEST(PrintTest, ParsePrintRoundTrip) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> deg(0, 7), c(-50, 50), den(1, 9);
    for (const RingTag& r : {Z, Q, RingTag::prime_field(101)}) {
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Scalar> cs;
            for (int k = deg(rng); k >= 0; --k)
                cs.push_back(r == Q ? Scalar::fraction(r, c(rng), den(rng)) : Scalar(r, c(rng)));
            UPoly p = UPoly(upoly_ring(r), cs).trimmed();
            ASSERT_TRUE(identical(parse_upoly(print_poly(p), r), p)) << print_poly(p);
        }
    }
}

TEST(PrintTest, MPolyRoundTrip) {
    std::vector<std::string> vars = {"T0", "T1", "T"};
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> e(0, 3), c(-9, 9), n(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        MPoly p(vars);
        for (int k = n(rng); k > 0; --k) p.add_term({unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng))}, c(rng));
        ASSERT_EQ(parse_mpoly(print_poly(p), vars), p) << print_poly(p);
    }
}

}  // namespace
