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
#include "ratmap/mpoly.hpp"

using namespace ratmap;

namespace {

const std::vector<std::string> V = {"T0", "T1", "T"};

MPoly M(const char* s) { return parse_mpoly(s, V); }

TEST(MPolyTest, ZeroCoefficientsAreDropped) {
    MPoly p = M("T0*T1 - T1*T0 + 3");
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.total_degree(), 0);
    EXPECT_EQ(M("0").total_degree(), -1);
}

TEST(MPolyTest, Degrees) {
    MPoly p = M("T0^2*T1 + T*T1^3");
    EXPECT_EQ(p.total_degree(), 4);
    EXPECT_EQ(p.degree_in("T1"), 3);
    EXPECT_TRUE(p.is_homogeneous_in({"T0", "T1"}, 3));
    p += M("T*T1");
    EXPECT_EQ(p.degree_in("T"), 1);
    EXPECT_FALSE(p.is_homogeneous_in({"T0", "T1"}, 3));
    EXPECT_TRUE(M("T0^2 + T*T0*T1").is_homogeneous_in({"T0", "T1"}, 2));
    EXPECT_THROW(p.degree_in("X"), DomainError);
}

TEST(MPolyTest, SubstituteAndEvaluate) {
    MPoly p = M("(T0 + T1)^2");
    EXPECT_EQ(p.substitute("T1", M("T*T0")), M("T0^2 + 2*T*T0^2 + T^2*T0^2"));
    MPoly q = M("T*T0^2 + (1 - T)*T1").evaluate("T", 1);
    EXPECT_EQ(q.vars(), (std::vector<std::string>{"T0", "T1"}));
    EXPECT_EQ(q, parse_mpoly("T0^2", {"T0", "T1"}));
    EXPECT_EQ(M("T0*T1 - T").evaluate_at({2, 3, 4}), 2);
}

TEST(MPolyTest, VariableListsMustAgree) {
    MPoly a = M("T0");
    MPoly b = parse_mpoly("T0", {"T0", "T1"});
    EXPECT_THROW(a + b, RingMismatch);
    EXPECT_EQ(b.with_variables(V), a);
    EXPECT_THROW(M("T").with_variables({"T0", "T1"}), DomainError);
}

TEST(MPolyTest, ArithmeticIdentities) {
    MPoly a = M("T0 - 2*T1"), b = M("T*T0 + 1"), c = M("T1^2 - T");
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.pow(3), a * a * a);
    for (int x = -2; x <= 2; ++x)
        EXPECT_EQ((a * b).evaluate_at({x, 1, 3}), a.evaluate_at({x, 1, 3}) * b.evaluate_at({x, 1, 3}));
}

}  // namespace
