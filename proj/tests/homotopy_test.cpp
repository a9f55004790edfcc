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

#include "ratmap/expr.hpp"
#include "ratmap/homotopy.hpp"
#include "ratmap/oracle.hpp"

using namespace ratmap;

namespace {

const RingTag Z = RingTag::integers();

HomotopyCert C(const char* s) { return HomotopyCert::parse(s, Z); }
PointedMap M(const char* s) { return PointedMap::parse(s, Z); }
UPoly TP(const char* s) { return parse_upoly(s, Z, "T"); }

CertCheck check_text(const char* s) {
    auto [F, G] = parse_homotopy_pair(s, Z);
    return check_cert(F, G);
}

TEST(CertTest, Examples) {
    HomotopyCert a = C("X^2/(T*X + 1)");
    EXPECT_EQ(a.n(), 2u);
    EXPECT_EQ(a.res(), TP("1"));

    CertCheck b = check_text("X^2/(X + T)");
    EXPECT_EQ(b.failure, CertFailure::resultant_not_unit);
    EXPECT_EQ(*b.resultant, TP("T^2"));
    EXPECT_EQ(b.message, "ResultantNotUnit(T^2)");

    EXPECT_EQ(C("(X^2 + 2*T*X + 2*T)/(X + (2*T - 1))").res(), TP("1"));
}

TEST(CertTest, OtherFailures) {
    EXPECT_EQ(check_text("T*X^2/1").failure, CertFailure::not_monic_in_x);
    EXPECT_EQ(check_text("X^2/(T*X^2)").failure, CertFailure::x_degree_too_high);
    EXPECT_EQ(check_text("X/2").failure, CertFailure::resultant_not_unit);
    EXPECT_THROW(C("X^2/(X + T)"), CertValidationError);
    // Over a field a nonzero constant is a unit; a nonconstant resultant is not.
    EXPECT_NO_THROW(HomotopyCert::parse("X/2", RingTag::rationals()));
    EXPECT_THROW(HomotopyCert::parse("X^2/(X + T)", RingTag::rationals()), CertValidationError);
}

TEST(EndpointTest, Examples) {
    HomotopyCert a = C("X^2/(T*X + 1)");
    EXPECT_EQ(endpoint(a, 0), M("X^2/1"));
    EXPECT_EQ(endpoint(a, 1), M("X^2/(X + 1)"));
    HomotopyCert k = C("(X^2 - X + 1)/(X - 1)");
    EXPECT_EQ(endpoint(k, 0), endpoint(k, 1));
    EXPECT_EQ(endpoint(C("(X^2 - T*X + T)/(X - 1)"), 1), M("(X^2 - X + 1)/(X - 1)"));
}

TEST(EndpointTest, EndpointResultantIsSpecializedResultant) {
    for (const char* s : {"X^2/(T*X + 1)", "(X^2 + 2*T*X + 2*T)/(X + 1)", "(X^2 + 2*T*X + 2*T)/(X + 2*T - 1)",
                          "(X^2 - T*X + T)/(X - 1)"}) {
        HomotopyCert c = C(s);
        for (int t : {0, 1}) EXPECT_EQ(endpoint(c, t).res(), c.res().evaluate(Scalar(Z, t))) << s;
    }
}

TEST(ReverseTest, Examples) {
    HomotopyCert a = C("X^2/(T*X + 1)");
    HomotopyCert r = reverse(a);
    auto [F, G] = parse_homotopy_pair("X^2/((1 - T)*X + 1)", Z);
    EXPECT_EQ(r.F(), F);
    EXPECT_EQ(r.G(), G);
    EXPECT_EQ(reverse(r).F(), a.F());
    EXPECT_EQ(reverse(r).G(), a.G());
    EXPECT_EQ(endpoint(r, 0), endpoint(a, 1));
    EXPECT_EQ(endpoint(r, 1), endpoint(a, 0));
}

TEST(ReverseTest, PreservesValidityOnRandomCertificates) {
    // First column of [[X + c1, -u1], [u1, 0]] * [[X + c2, -u2], [u2, 0]] with c1, c2 in Z[T].
    Rng rng(51);
    HomotopyPoly X = parse_homotopy_poly("X", Z);
    for (int trial = 0; trial < 40; ++trial) {
        HomotopyPoly c1 = random_homotopy_poly(rng, Z, 0, 2, 3), c2 = random_homotopy_poly(rng, Z, 0, 2, 3);
        long long u1 = rng() % 2 ? 1 : -1, u2 = rng() % 2 ? 1 : -1;
        HomotopyPoly F = ((X + c1) * (X + c2) - parse_homotopy_poly(u1 * u2 > 0 ? "1" : "-1", Z)).trimmed();
        HomotopyPoly G = (parse_homotopy_poly(u1 > 0 ? "1" : "-1", Z) * (X + c2)).trimmed();
        HomotopyCert c = HomotopyCert::validate(F, G);
        HomotopyCert r = reverse(c);
        ASSERT_EQ(endpoint(r, 0), endpoint(c, 1));
        ASSERT_EQ(endpoint(r, 1), endpoint(c, 0));
        ASSERT_EQ(endpoint(c, 0).res(), c.res().evaluate(Scalar(Z, 0)));
    }
}

TEST(ChainTest, BuiltinPasses) {
    for (const auto& name : builtin_chain_names()) {
        ChainReport rep = verify_chain(builtin_chain(name));
        EXPECT_TRUE(rep.pass) << name << ": " << rep.first_failure();
        ASSERT_EQ(rep.links.size(), 4u);
        ASSERT_EQ(rep.junctions.size(), 5u);
        for (const auto& l : rep.links) {
            EXPECT_EQ(*l.resultant, TP("1"));
            ASSERT_TRUE(l.oracle_resultant.has_value());
            EXPECT_EQ(*l.oracle_resultant, TP("1"));
        }
    }
    EXPECT_THROW(builtin_chain("nope"), DomainError);
}

TEST(ChainTest, BuiltinEndpoints) {
    ChainReport rep = verify_chain(builtin_chain("prop_3_4_3"));
    EXPECT_EQ(print_pair(rep.links[0].end), "X^2/(X + 1)");
    EXPECT_EQ(print_pair(rep.links[1].end), "(X^2 + 2*X + 2)/(X + 1)");
    EXPECT_EQ(rep.links[2].orientation, Orientation::reversed);
    EXPECT_EQ(print_pair(rep.links[2].end), "X^2/(X - 1)");
    EXPECT_EQ(print_pair(rep.links[3].end), "(X^2 - X + 1)/(X - 1)");
    EXPECT_EQ(rep.junctions[2].label, "2/3");
    EXPECT_EQ(rep.junctions.front().label, "from/1");
    EXPECT_EQ(rep.junctions.back().label, "4/to");
}

TEST(ChainTest, ReportWalkConnectsFromTo) {
    Chain chain = builtin_chain("prop_3_4_3");
    ChainReport rep = verify_chain(chain);
    ASSERT_TRUE(rep.pass);
    MapPair at = chain.from;
    for (std::size_t i = 0; i < rep.links.size(); ++i) {
        ASSERT_TRUE(rep.junctions[i].ok);
        ASSERT_EQ(rep.links[i].start, at);
        at = rep.links[i].end;
    }
    EXPECT_EQ(at, chain.to);
}

TEST(ChainTest, ConstantCertificate) {
    Chain c;
    c.ring = Z;
    auto [F, G] = parse_homotopy_pair("X^2/1", Z);
    c.links = {CertLink{F, G, Orientation::forward}};
    c.from = c.to = parse_upoly_pair("X^2/1", Z);
    EXPECT_TRUE(verify_chain(c).pass);
}

TEST(ChainTest, FlippedLinkFailsAtJunction) {
    Chain c = builtin_chain("prop_3_4_3");
    c.links[2].orientation = Orientation::forward;
    ChainReport rep = verify_chain(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.first_failure().rfind("junction 2/3", 0), 0u) << rep.first_failure();
}

TEST(ChainTest, InvalidLinkIsReportedInPlace) {
    Chain c = builtin_chain("prop_3_4_3");
    auto [F, G] = parse_homotopy_pair("X^2/(X + T)", Z);
    c.links[0] = CertLink{F, G, Orientation::forward};
    ChainReport rep = verify_chain(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_FALSE(rep.links[0].valid);
    // Failures come in chain order: the new link also breaks the junction before it.
    ASSERT_EQ(rep.failures.size(), 2u);
    EXPECT_EQ(rep.failures[0], "junction from/1: X^2/1 != X^2/X");
    EXPECT_EQ(rep.failures[1], "link 1: ResultantNotUnit(T^2)");
    EXPECT_TRUE(rep.junctions[1].ok);  // X^2/(X + T) still ends at X^2/(X + 1)
}

TEST(ChainTest, WrongTargetFailsLastJunction) {
    Chain c = builtin_chain("prop_3_4_3");
    c.to = parse_upoly_pair("X/1", Z);
    ChainReport rep = verify_chain(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.first_failure().rfind("junction 4/to", 0), 0u);
}

TEST(ChainTest, OrientationSpellings) {
    EXPECT_EQ(parse_orientation("forward"), Orientation::forward);
    EXPECT_EQ(parse_orientation("R"), Orientation::reversed);
    EXPECT_THROW(parse_orientation("sideways"), SchemaError);
    EXPECT_EQ(junction_label(0, 3), "from/1");
    EXPECT_EQ(junction_label(1, 3), "1/2");
    EXPECT_EQ(junction_label(3, 3), "3/to");
}

}  // namespace
