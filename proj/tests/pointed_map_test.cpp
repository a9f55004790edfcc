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
#include "ratmap/oracle.hpp"
#include "ratmap/pointed_map.hpp"

using namespace ratmap;

namespace {

const RingTag Z = RingTag::integers();
const RingTag Q = RingTag::rationals();

UPoly P(const char* s, const RingTag& r = Z) { return parse_upoly(s, r); }
PointedMap M(const char* s, const RingTag& r = Z) { return PointedMap::parse(s, r); }

MapFailure failure_of(const char* text, const RingTag& r = Z) {
    auto [f, g] = parse_upoly_pair(text, r);
    return check_map(f, g).failure;
}

TEST(ValidateTest, Examples) {
    PointedMap sq = M("X^2/1");
    EXPECT_EQ(sq.n(), 2u);
    EXPECT_EQ(sq.res(), Scalar(Z, 1));

    auto [f, g] = parse_upoly_pair("X^2/2", Z);
    MapCheck c = check_map(f, g);
    EXPECT_EQ(c.failure, MapFailure::resultant_not_unit);
    ASSERT_TRUE(c.resultant.has_value());
    EXPECT_EQ(*c.resultant, Scalar(Z, 4));
    EXPECT_EQ(M("X^2/2", Q).res(), Scalar(Q, 4));

    EXPECT_EQ(failure_of("X^2/X"), MapFailure::resultant_not_unit);
    EXPECT_EQ(failure_of("X^2/X", Q), MapFailure::resultant_not_unit);
    EXPECT_EQ(failure_of("X^2/X", RingTag::prime_field(3)), MapFailure::resultant_not_unit);
}

TEST(ValidateTest, FailureKindsInOrder) {
    EXPECT_EQ(failure_of("2*X^2/1"), MapFailure::not_monic);
    EXPECT_EQ(failure_of("2*X^2/X^3"), MapFailure::not_monic);
    EXPECT_EQ(failure_of("X^2/X^2"), MapFailure::degree_too_high);
    EXPECT_EQ(failure_of("X/1"), MapFailure::none);
    EXPECT_EQ(failure_of("1/0"), MapFailure::none);
    EXPECT_EQ(failure_of("1/1"), MapFailure::degree_too_high);
    EXPECT_EQ(failure_of("0/1"), MapFailure::not_monic);
    EXPECT_EQ(check_map(P("X"), P("1", Q)).failure, MapFailure::ring_mismatch);
    EXPECT_THROW(M("X^2/X"), MapValidationError);
    try {
        M("X^2/X");
    } catch (const MapValidationError& e) {
        EXPECT_EQ(e.failure(), MapFailure::resultant_not_unit);
        EXPECT_EQ(*e.resultant(), Scalar(Z, 0));
    }
}

TEST(ValidateTest, NeutralElement) {
    PointedMap z = M("1/0");
    EXPECT_EQ(z.n(), 0u);
    EXPECT_TRUE(is_zero(z.g()));
    EXPECT_EQ(z.res(), Scalar(Z, 1));
}

TEST(BezoutPairTest, Examples) {
    SL2Witness id = bezout_pair(M("X/1"));
    EXPECT_EQ(id.p, P("0"));
    EXPECT_EQ(id.q, P("1"));
    EXPECT_EQ(id.matrix(), (Mat2<UPoly>{P("X"), P("-1"), P("1"), P("0")}));

    SL2Witness me = bezout_pair(M("(X-1)/(-1)"));
    EXPECT_EQ(me.p, P("0"));
    EXPECT_EQ(me.q, P("-1"));
    EXPECT_EQ(me.matrix(), (Mat2<UPoly>{P("X - 1"), P("1"), P("-1"), P("0")}));

    SL2Witness w = bezout_pair(M("(X^2 - X + 1)/(X - 1)"));
    EXPECT_EQ(w.p, P("1"));
    EXPECT_EQ(w.q, P("-X"));

    SL2Witness zero = bezout_pair(M("1/0"));
    EXPECT_EQ(zero.p, P("1"));
    EXPECT_EQ(zero.q, P("0"));
}

TEST(BezoutPairTest, UnitResultantIsDividedOut) {
    // res = -1 here, so the raw Cramer solution is negated.
    PointedMap u = M("(X-1)/(-1)");
    EXPECT_EQ(u.res(), Scalar(Z, -1));
    SL2Witness w = bezout_pair(u);
    EXPECT_EQ(w.p * u.f() + w.q * u.g(), P("1"));
    PointedMap v = M("X^2/3", Q);
    SL2Witness wq = bezout_pair(v);
    EXPECT_EQ(wq.p * v.f() + wq.q * v.g(), P("1", Q));
    EXPECT_EQ(wq.q, P("(1/3)", Q));
}

TEST(OplusTest, Examples) {
    EXPECT_EQ(oplus(M("X/1"), M("(X-1)/(-1)")), M("(X^2 - X + 1)/(X - 1)"));
    EXPECT_EQ(oplus(M("X/1"), M("(X-1)/(-1)")).to_string(), "(X^2 - X + 1)/(X - 1)");
    EXPECT_EQ(oplus(M("X/1"), M("X/1")), M("(X^2 - 1)/X"));
    EXPECT_TRUE(is_unit(resultant_oracle(P("X^2 - 1"), 2, P("X"), 2)));
    PointedMap u = M("(X^2 - X + 1)/(X - 1)"), zero = M("1/0");
    EXPECT_EQ(oplus(u, zero), u);
    EXPECT_EQ(oplus(zero, u), u);
    EXPECT_THROW(oplus(M("X/1"), M("X/1", Q)), RingMismatch);
}

TEST(OplusTest, FrozenCubic) {
    PointedMap u = oplus(M("(X^2 - X + 1)/(X - 1)"), M("X/1"));
    EXPECT_EQ(u, M("(X^3 - X^2 + 2*X)/(X^2 - X + 1)"));
    SL2Witness w = bezout_pair(M("(X^3 - 2*X^2 + 3*X - 1)/(X^2 - X + 1)"));
    EXPECT_EQ(w.p, P("1 - X"));
    EXPECT_EQ(w.q, P("X^2 - 2*X + 2"));
}

TEST(OplusTest, LawsOnRandomMaps) {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        RingTag r = trial % 3 == 0 ? Z : (trial % 3 == 1 ? Q : RingTag::prime_field(101));
        PointedMap u = gen_valid_map(rng, r, 0, 3, 3), v = gen_valid_map(rng, r, 0, 3, 3), w = gen_valid_map(rng, r, 0, 3, 3);
        PointedMap uv = oplus(u, v);
        ASSERT_EQ(uv.n(), u.n() + v.n());
        ASSERT_EQ(oplus(uv, w), oplus(u, oplus(v, w)));
        Mat2<UPoly> prod = bezout_pair(u).matrix() * bezout_pair(v).matrix();
        Mat2<UPoly> direct = bezout_pair(uv).matrix();
        ASSERT_EQ(direct, prod);
        ASSERT_EQ(direct.det(), P("1", r));
        SL2Witness bw = bezout_pair(uv);
        if (uv.n() == 0) continue;
        ASSERT_TRUE(!bw.p.degree() || *bw.p.degree() + 1 < uv.n());
        ASSERT_TRUE(!bw.q.degree() || *bw.q.degree() < uv.n());
    }
}

TEST(NamedTest, Examples) {
    EXPECT_EQ(named(NamedMap::identity).to_string(), "X/1");
    EXPECT_EQ(named(NamedMap::zero).to_string(), "1/0");
    EXPECT_EQ(named(NamedMap::squaring).to_string(), "X^2/1");
    EXPECT_EQ(named(NamedMap::minus_epsilon).to_string(), "(X - 1)/(-1)");
    EXPECT_EQ(parse_named_map("minus_epsilon"), NamedMap::minus_epsilon);
    EXPECT_THROW(parse_named_map("eta"), DomainError);
}

TEST(HomogenizeTest, Examples) {
    const auto& v = projective_vars();
    auto [s0, s1] = homogenize(named(NamedMap::squaring));
    EXPECT_EQ(s0, parse_mpoly("T0^2", v));
    EXPECT_EQ(s1, parse_mpoly("T1^2", v));
    auto [e0, e1] = homogenize(named(NamedMap::minus_epsilon));
    EXPECT_EQ(e0, parse_mpoly("T0 - T1", v));
    EXPECT_EQ(e1, parse_mpoly("-T1", v));
    auto [i0, i1] = homogenize(named(NamedMap::identity));
    EXPECT_EQ(i0, parse_mpoly("T0", v));
    EXPECT_EQ(i1, parse_mpoly("T1", v));
    EXPECT_THROW(homogenize(M("X/1", Q)), DomainError);
}

TEST(HomogenizeTest, DehomogenizeInverts) {
    for (const char* s : {"X/1", "1/0", "X^2/1", "(X-1)/(-1)", "(X^2 - X + 1)/(X - 1)", "(X^3 - X^2 + 1)/(X^2 - X + 1)"}) {
        PointedMap u = M(s);
        auto [F0, F1] = homogenize(u);
        EXPECT_EQ(dehomogenize(F0, F1), u) << s;
    }
    const auto& v = projective_vars();
    EXPECT_THROW(dehomogenize(parse_mpoly("T0^2 + T1", v), parse_mpoly("T1^2", v)), DomainError);
    EXPECT_THROW(dehomogenize(parse_mpoly("2*T0^2", v), parse_mpoly("T1^2", v)), DomainError);
}

}  // namespace
