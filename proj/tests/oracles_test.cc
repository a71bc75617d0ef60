// Copyright 2026 The SEASON-cpp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "season/oracles.h"

#include <random>

#include "gtest/gtest.h"
#include "season/textcore.h"
#include "test_util.h"

namespace season::oracles {
namespace {

TEST(LcsBruteforceTest, Examples) {
  EXPECT_EQ(LcsBruteforce({}, {"a", "b"}), 0);
  EXPECT_EQ(LcsBruteforce({"a"}, {"a"}), 1);
  EXPECT_EQ(LcsBruteforce({"A", "B", "C", "B", "D", "A", "B"}, {"B", "D", "C", "A", "B", "A"}),
            4);
  EXPECT_THROW(LcsBruteforce(TokenSeq(9, "a"), {"a"}), std::length_error);
}

TEST(LcsBruteforceTest, AgreesWithDynamicProgramming) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const TokenSeq a = testing::RandomTokens(rng, 0, 8, 4);
    const TokenSeq b = testing::RandomTokens(rng, 0, 8, 4);
    ASSERT_EQ(static_cast<std::size_t>(LcsBruteforce(a, b)), LcsLength(a, b));
  }
}

TEST(WmdBruteforceTest, Examples) {
  EXPECT_EQ(WmdBruteforce({0.5, 0.5}, {0.5, 0.5}, {0, 3, 3, 0}), 0.0);
  EXPECT_EQ(WmdBruteforce({1.0}, {1.0}, {1.75}), 1.75);
  EXPECT_EQ(WmdBruteforce({0.5, 0.5}, {0.5, 0.5}, {0, 1, 1, 0}), 0.0);
  EXPECT_NEAR(WmdBruteforce({1.0}, {0.25, 0.75}, {2, 4}), 3.5, 1e-15);
  EXPECT_THROW(WmdBruteforce({0.3, 0.7}, {1.0}, {1, 1}), std::length_error);
  EXPECT_THROW(WmdBruteforce({0.25, 0.25, 0.25, 0.25}, {1.0}, {1, 1, 1, 1}),
               std::length_error);
}

TEST(MeteorAlignmentBruteforceTest, Examples) {
  const auto r = MeteorAlignmentBruteforce({"a", "b", "c", "d"}, {"a", "b", "c", "d"});
  EXPECT_EQ(r.matches, 4);
  EXPECT_EQ(r.chunks, 1);
  EXPECT_DOUBLE_EQ(MeteorScoreFromAlignment(r, 4, 4), 0.9921875);
  const auto swapped = MeteorAlignmentBruteforce({"b", "a"}, {"a", "b"});
  EXPECT_EQ(swapped.matches, 2);
  EXPECT_EQ(swapped.chunks, 2);
  EXPECT_THROW(MeteorAlignmentBruteforce(TokenSeq(8, "a"), {"a"}), std::length_error);
}

TEST(RandomStepModelTest, DeterministicAndNormalized) {
  RandomStepModel m(5, 4, 9);
  const std::vector<int> prefix{1, 2};
  EXPECT_EQ(m.NextLogProbs(prefix), m.NextLogProbs(prefix));
  double z = 0;
  for (double x : m.NextLogProbs(prefix)) z += std::exp(x);
  EXPECT_NEAR(z, 1.0, 1e-12);
  EXPECT_NE(m.NextLogProbs(prefix), m.NextLogProbs(std::vector<int>{2, 1}));
}

}  // namespace
}  // namespace season::oracles
