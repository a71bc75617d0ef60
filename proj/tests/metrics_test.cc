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

#include "season/metrics.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "season/oracles.h"
#include "test_util.h"

namespace season {
namespace {

const TokenSeq kKill{"police", "kill", "the", "gunman"};
const TokenSeq kKilled{"police", "killed", "the", "gunman"};

TEST(RougeNTest, Examples) {
  const MetricScore s = RougeN(kKill, kKilled, 1);
  EXPECT_DOUBLE_EQ(s.precision, 0.75);
  EXPECT_DOUBLE_EQ(s.recall, 0.75);
  EXPECT_DOUBLE_EQ(s.f1, 0.75);
  for (int n = 1; n <= 4; ++n) EXPECT_DOUBLE_EQ(RougeN(kKilled, kKilled, n).f1, 1.0);
  EXPECT_EQ(RougeN({"a"}, {"b"}, 1).f1, 0.0);
  EXPECT_EQ(RougeN({"a"}, {"a"}, 2).f1, 0.0);
}

TEST(RougeNTest, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const TokenSeq a = testing::RandomTokens(rng, 1, 10, 5);
    const TokenSeq b = testing::RandomTokens(rng, 1, 10, 5);
    for (int n = 1; n <= 3; ++n) {
      ASSERT_NEAR(RougeN(a, b, n).f1, oracles::RougeNF1Bruteforce(a, b, n), 1e-12);
    }
  }
}

TEST(RougeLTest, Examples) {
  const MetricScore s = RougeL({"the", "gunman", "kill", "police"}, kKilled);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
  EXPECT_DOUBLE_EQ(s.f1, 0.5);
  EXPECT_DOUBLE_EQ(RougeL(kKill, kKill).f1, 1.0);
  EXPECT_EQ(RougeL({}, kKill).f1, 0.0);
  EXPECT_EQ(RougeL(kKill, {}).f1, 0.0);
}

TEST(RougeLsumTest, Examples) {
  EXPECT_DOUBLE_EQ(RougeLsum("a b c d", "a c b d").f1,
                   RougeL({"a", "b", "c", "d"}, {"a", "c", "b", "d"}).f1);
  EXPECT_DOUBLE_EQ(RougeLsum("a b. c d.", "a b. c d.").f1, 1.0);
  const MetricScore s = RougeLsum("A b. C d.", "a b c d");
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
}

TEST(RougeLsumTest, ClippedToOne) {
  // The same reference tokens matched from two candidate sentences are
  // credited once.
  const MetricScore s = RougeLsum("A b. A b.", "a b");
  EXPECT_LE(s.precision, 1.0);
  EXPECT_LE(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.precision, 2.0 / 6.0);  // periods are tokens
}

TEST(MeteorTest, WorkedExamples) {
  EXPECT_NEAR(Meteor({"hello"}, {"hello"}), 0.5, 1e-12);
  EXPECT_NEAR(Meteor({"a", "b", "c", "d"}, {"a", "b", "c", "d"}), 0.9921875, 1e-12);
  EXPECT_EQ(Meteor({"a"}, {"b"}), 0.0);
  const MeteorResult r = MeteorDetailed({"a", "b", "c", "d"}, {"a", "b", "c", "d"});
  EXPECT_EQ(r.matches, 4);
  EXPECT_EQ(r.chunks, 1);
  EXPECT_TRUE(r.exhaustive);
}

TEST(MeteorTest, MinimizesChunksAmongMaximalAlignments) {
  // "a" can pair with either reference "a"; only the second keeps one chunk.
  const MeteorResult r = MeteorDetailed({"a", "b"}, {"a", "x", "a", "b"});
  EXPECT_EQ(r.matches, 2);
  EXPECT_EQ(r.chunks, 1);
}

TEST(MeteorTest, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const TokenSeq a = testing::RandomTokens(rng, 1, 7, 3);
    const TokenSeq b = testing::RandomTokens(rng, 1, 7, 3);
    const MeteorResult got = MeteorDetailed(a, b);
    const auto want = oracles::MeteorAlignmentBruteforce(a, b);
    ASSERT_EQ(got.matches, want.matches);
    ASSERT_EQ(got.chunks, want.chunks);
    ASSERT_NEAR(got.score, oracles::MeteorScoreFromAlignment(want, a.size(), b.size()),
                1e-12);
  }
}

TEST(MeteorTest, LongInputsFallBackGracefully) {
  TokenSeq a, b;
  for (int i = 0; i < 120; ++i) {
    a.push_back(std::string(1, static_cast<char>('a' + i % 3)));
    b.push_back(std::string(1, static_cast<char>('a' + (i * 7) % 3)));
  }
  const MeteorResult r = MeteorDetailed(a, b);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.matches, 120);
  EXPECT_GT(r.score, 0.0);
  EXPECT_LE(r.score, 1.0);
}

EmbeddingTable UnitTable() {
  EmbeddingTable t(2);
  t.Add("a", {1, 0});
  t.Add("b", {0, 1});
  t.Add("c", {1, 1});
  return t;
}

TEST(BertScoreTest, Examples) {
  const EmbeddingTable t = UnitTable();
  const MetricScore self = BertScore({"a", "c"}, {"a", "c"}, t, false);
  EXPECT_NEAR(self.f1, 1.0, 1e-12);
  EXPECT_EQ(BertScore({"a"}, {"b"}, t, false).f1, 0.0);
  const MetricScore s = BertScore({"a"}, {"a", "b"}, t, false);
  EXPECT_NEAR(s.recall, 0.5, 1e-12);
  EXPECT_NEAR(s.precision, 1.0, 1e-12);
  EXPECT_NEAR(s.f1, 2.0 / 3.0, 1e-12);
  EXPECT_THROW(BertScore({}, {"a"}, t, false), std::invalid_argument);
}

TEST(BertScoreTest, IdfWeightsRecall) {
  EmbeddingTable t = UnitTable();
  t.SetIdf("a", 1.0);
  t.SetIdf("b", 3.0);
  const MetricScore s = BertScore({"a"}, {"a", "b"}, t, true);
  EXPECT_NEAR(s.recall, 0.25, 1e-12);
}

TEST(EmbeddingTableTest, UnknownFallback) {
  EmbeddingTable t = UnitTable();
  EXPECT_THROW(t.Lookup("zzz"), std::out_of_range);
  t.Add("<unk>", {0.5, 0.5});
  EXPECT_EQ(t.Lookup("zzz"), (std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(t.Add("d", {1, 2, 3}), std::invalid_argument);
  EXPECT_EQ(t.Idf("zzz"), 1.0);
}

TEST(MoverScoreTest, Examples) {
  const EmbeddingTable t = UnitTable();
  EXPECT_NEAR(MoverScore({"a", "b", "a"}, {"a", "b", "a"}, t), 1.0, 1e-12);
  EmbeddingTable line(1);
  line.Add("a", {0.0});
  line.Add("b", {1.0});
  EXPECT_NEAR(MoverScore({"a"}, {"b"}, line), 0.5, 1e-12);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const TokenSeq x = testing::RandomTokens(rng, 1, 6, 3);
    const TokenSeq y = testing::RandomTokens(rng, 1, 6, 3);
    const double m = MoverScore(x, y, t);
    EXPECT_GT(m, 0.0);
    EXPECT_LE(m, 1.0);
  }
}

TEST(MoverScoreTest, MatchesGridOracle) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal(0.0, 1.0);
  EmbeddingTable t(3);
  for (const char* tok : {"a", "b", "c"}) t.Add(tok, {normal(rng), normal(rng), normal(rng)});
  for (int i = 0; i < 40; ++i) {
    const TokenSeq x = testing::RandomTokens(rng, 4, 4, 3);
    const TokenSeq y = testing::RandomTokens(rng, 4, 4, 3);
    MoverDetail d;
    const double wmd = WordMoversDistance(x, y, t, &d);
    ASSERT_NEAR(wmd, oracles::WmdBruteforce(d.problem.supply, d.problem.demand,
                                            d.problem.cost),
                1e-6);
    ASSERT_LE(MarginalViolation(d.problem, d.plan), 1e-9);
  }
}

TEST(NovelNGramsTest, Examples) {
  EXPECT_TRUE(NovelNGrams({"a", "b"}, {"x", "a", "b", "y"}, 2).empty());
  EXPECT_EQ(NovelNGrams({"a", "b", "d"}, {"a", "b", "c"}, 2),
            (std::set<NGram>{{"b", "d"}}));
  EXPECT_EQ(NovelNGrams({"a", "b", "d"}, {"a", "b", "c"}, 1), (std::set<NGram>{{"d"}}));
}

}  // namespace
}  // namespace season
