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

#include "ratmap/int_linear.hpp"

using namespace ratmap;

namespace {

IntMatrix make(std::size_t r, std::size_t c, const std::vector<long long>& v) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < v.size(); ++i) m.data[i] = v[i];
    return m;
}

std::vector<Integer> vec(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

TEST(HermiteSolverTest, SolvesIntegerSystems) {
    IntMatrix a = make(2, 2, {2, 3, 1, 2});
    HermiteSolver s(a);
    auto x = s.solve(vec({7, 4}));
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), vec({7, 4}));
    EXPECT_EQ(s.rank(), 2u);
}

TEST(HermiteSolverTest, RejectsRationalOnlySolutions) {
    IntMatrix a = make(1, 1, {2});
    HermiteSolver s(a);
    EXPECT_FALSE(s.solve(vec({1})));
    EXPECT_TRUE(s.solve(vec({4})));
    EXPECT_TRUE(feasible_mod_p(a, vec({1})));  // solvable over the field, not over Z
}

TEST(HermiteSolverTest, GcdCombinations) {
    // 6x + 10y + 15z = 1 has integer solutions though no pair of coefficients is coprime.
    IntMatrix a = make(1, 3, {6, 10, 15});
    auto x = HermiteSolver(a).solve(vec({1}));
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), vec({1}));
}

TEST(HermiteSolverTest, InconsistentSystems) {
    IntMatrix a = make(2, 1, {1, 1});
    EXPECT_FALSE(HermiteSolver(a).solve(vec({1, 2})));
    EXPECT_FALSE(feasible_mod_p(a, vec({1, 2})));
    EXPECT_TRUE(HermiteSolver(a).solve(vec({3, 3})));
}

TEST(HermiteSolverTest, RandomSystemsWithKnownSolutions) {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> c(-4, 4), dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = dim(rng), k = dim(rng);
        IntMatrix a(r, k);
        for (auto& v : a.data) v = c(rng);
        std::vector<Integer> x0(k);
        for (auto& v : x0) v = c(rng);
        std::vector<Integer> b = a.apply(x0);
        ASSERT_TRUE(feasible_mod_p(a, b));
        auto x = HermiteSolver(a).solve(b);
        ASSERT_TRUE(x);
        ASSERT_EQ(a.apply(*x), b);
    }
}

}  // namespace
