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

#include "ratmap/oracle.hpp"
#include "ratmap/proj_linear.hpp"

using namespace ratmap;

namespace {

const RingTag Z = RingTag::integers();

const MatrixFamily H1 = parse_family("T", "-1", "1", "0");
const MatrixFamily H2 = parse_family("0", "1", "-1", "T");

ScalarMatrix SM(long long a, long long b, long long c, long long d) { return scalar_matrix(Z, a, b, c, d); }

TEST(FamilyTest, Determinants) {
    EXPECT_EQ(det_family(H1), parse_upoly("1", Z, "T"));
    EXPECT_EQ(det_family(H2), parse_upoly("1", Z, "T"));
    EXPECT_TRUE(is_valid_family(H1));
    EXPECT_TRUE(is_valid_family(H2));
    MatrixFamily diag = parse_family("T", "0", "0", "1");
    EXPECT_EQ(det_family(diag), parse_upoly("T", Z, "T"));
    EXPECT_FALSE(is_valid_family(diag));
    EXPECT_FALSE(is_valid_family(parse_family("2", "0", "0", "1")));
}

TEST(FamilyTest, Endpoints) {
    EXPECT_EQ(endpoint_matrix(H1, 1), SM(1, -1, 1, 0));
    EXPECT_EQ(endpoint_matrix(H2, 1), SM(0, 1, -1, 1));
    EXPECT_EQ(endpoint_matrix(H1, 0), SM(0, -1, 1, 0));
    EXPECT_EQ(endpoint_matrix(reverse_family(H1), 0), endpoint_matrix(H1, 1));
}

TEST(FamilyTest, ProjectiveEquality) {
    EXPECT_TRUE(projectively_equal(SM(0, -1, 1, 0), SM(0, 1, -1, 0)));
    EXPECT_TRUE(projectively_equal(SM(1, 2, 3, 4), SM(1, 2, 3, 4)));
    EXPECT_FALSE(projectively_equal(endpoint_matrix(H1, 1), endpoint_matrix(H2, 1)));
    EXPECT_FALSE(projectively_equal(SM(1, 0, 0, 1), SM(2, 0, 0, 2)));  // 2 is not a unit of Z
    RingTag Q = RingTag::rationals();
    EXPECT_TRUE(projectively_equal(scalar_matrix(Q, 1, 0, 0, 1), scalar_matrix(Q, 2, 0, 0, 2)));
}

TEST(FamilyTest, InfinityConditions) {
    EXPECT_TRUE(image_of_infinity_in_open(H1));
    EXPECT_TRUE(image_of_infinity_in_open(H2));
    EXPECT_FALSE(image_of_infinity_in_open(parse_family("1", "0", "0", "1")));
    EXPECT_TRUE(fixes_infinity(parse_family("1", "0", "0", "1")));
    EXPECT_FALSE(fixes_infinity(H1));
}

TEST(FamilyTest, PropertiesOnRandomFamilies) {
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        MatrixFamily a = random_valid_family(rng, 3), b = random_valid_family(rng, 3);
        ASSERT_TRUE(is_valid_family(a));
        for (int t : {0, 1}) ASSERT_EQ(endpoint_matrix(a, t).det(), det_family(a).evaluate(Scalar(Z, t)));
        ASSERT_TRUE(is_valid_family(a * b));
        ScalarMatrix m = endpoint_matrix(a, 0), n = m.negated(), k = endpoint_matrix(b, 1);
        ASSERT_TRUE(projectively_equal(m, m));
        ASSERT_EQ(projectively_equal(m, k), projectively_equal(k, m));
        ASSERT_TRUE(projectively_equal(m, n));
        ASSERT_EQ(projectively_equal(n, k), projectively_equal(m, k));
    }
}

TEST(MatrixChainTest, BuiltinPasses) {
    for (const auto& name : builtin_matrix_chain_names()) {
        MatrixChainReport rep = verify_matrix_chain(builtin_matrix_chain(name));
        EXPECT_TRUE(rep.pass) << rep.first_failure();
        ASSERT_EQ(rep.junctions.size(), 3u);
        EXPECT_TRUE(rep.junctions[0].exact);
        EXPECT_FALSE(rep.junctions[1].exact);
        EXPECT_TRUE(rep.junctions[2].exact);
    }
}

TEST(MatrixChainTest, ReplacedFamilyFails) {
    MatrixChain c = builtin_matrix_chain("prop_3_4_2");
    c.links[1].family = parse_family("0", "1", "-1", "2*T");
    MatrixChainReport rep = verify_matrix_chain(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.first_failure().rfind("junction 2/to", 0), 0u) << rep.first_failure();
}

TEST(MatrixChainTest, ExactJunctionsFail) {
    MatrixChain c = builtin_matrix_chain("prop_3_4_2");
    c.junction = JunctionMode::exact;
    MatrixChainReport rep = verify_matrix_chain(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.first_failure().rfind("junction 1/2", 0), 0u) << rep.first_failure();
}

TEST(MatrixChainTest, InvalidLinksAreReported) {
    MatrixChain c;
    c.links = {{parse_family("T", "0", "0", "1"), Orientation::forward}};
    c.from = SM(0, 0, 0, 1);
    c.to = SM(1, 0, 0, 1);
    MatrixChainReport rep = verify_matrix_chain(c);
    EXPECT_FALSE(rep.pass);
    ASSERT_EQ(rep.failures.size(), 2u);
    EXPECT_EQ(rep.failures[0], "link 1: determinant T is not a unit");
    EXPECT_EQ(parse_junction_mode("exact"), JunctionMode::exact);
    EXPECT_THROW(parse_junction_mode("loose"), SchemaError);
}

}  // namespace
