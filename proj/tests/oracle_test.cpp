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

using namespace ratmap;

namespace {

TEST(GeneratorTest, ValidMapsInEveryRing) {
    for (const RingTag& r : {RingTag::integers(), RingTag::rationals(), RingTag::prime_field(5)}) {
        RandomMapSpec spec;
        spec.ring = r;
        spec.min_degree = spec.max_degree = 2;
        spec.seed = 3;
        PointedMap u = gen_valid_map(spec);
        EXPECT_EQ(u.n(), 2u);
        EXPECT_TRUE(check_map(u.f(), u.g()).ok());
    }
}

TEST(GeneratorTest, DegreeZeroIsNeutral) {
    RandomMapSpec spec;
    spec.min_degree = spec.max_degree = 0;
    EXPECT_EQ(gen_valid_map(spec), PointedMap::parse("1/0", RingTag::integers()));
}

TEST(GeneratorTest, IntegerMapsHaveDeterminantOneWitness) {
    RandomMapSpec spec;
    spec.min_degree = spec.max_degree = 3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        spec.seed = seed;
        PointedMap u = gen_valid_map(spec);
        ASSERT_EQ(u.n(), 3u);
        ASSERT_EQ(bezout_pair(u).matrix().det(), parse_upoly("1", RingTag::integers()));
    }
}

TEST(GeneratorTest, SeedsAreReproducible) {
    RandomMapSpec spec;
    spec.ring = RingTag::rationals();
    spec.seed = 99;
    EXPECT_EQ(gen_valid_map(spec), gen_valid_map(spec));
}

TEST(GeneratorTest, BudgetIsEnforced) {
    RandomMapSpec spec;
    spec.ring = RingTag::prime_field(2);
    spec.min_degree = spec.max_degree = 3;
    spec.attempt_budget = 0;
    EXPECT_THROW(gen_valid_map(spec), SamplingBudgetExceeded);
}

TEST(PropertyTest, EveryPropertyPasses) {
    for (const auto& name : property_names()) {
        PropertyVerdict v = run_property(name, 60, 7);
        EXPECT_TRUE(v.pass) << name << ": " << v.message << " " << v.counterexample.dump();
        EXPECT_EQ(v.seed, 7u);
        EXPECT_EQ(v.to_json()["verdict"], "PASS");
    }
}

TEST(PropertyTest, CoreLawsAtFullSize) {
    EXPECT_TRUE(run_property("swap_law", 1000, 7).pass);
    EXPECT_TRUE(run_property("bezout_law", 1000, 7).pass);
    EXPECT_TRUE(run_property("oplus_assoc", 300, 7).pass);
}

TEST(PropertyTest, UnknownName) { EXPECT_THROW(run_property("no_such_law", 1, 1), DomainError); }

}  // namespace
