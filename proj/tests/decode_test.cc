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

#include "season/decode.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "grad_check.h"
#include "season/errors.h"
#include "season/oracles.h"
#include "test_util.h"

namespace season {
namespace {

using oracles::BestSequenceBruteforce;
using oracles::RandomStepModel;
using testing::TableStepModel;

bool HasRepeatedNGram(const std::vector<int>& s, int n) {
  for (std::size_t a = 0; a + n <= s.size(); ++a) {
    for (std::size_t b = a + 1; b + n <= s.size(); ++b) {
      if (std::equal(s.begin() + a, s.begin() + a + n, s.begin() + b)) return true;
    }
  }
  return false;
}

TEST(LengthPenaltyTest, Examples) {
  EXPECT_EQ(LengthPenalty(9, 0.0), 1.0);
  EXPECT_EQ(LengthPenalty(1, 1.5), 1.0);
  EXPECT_NEAR(LengthPenalty(7, 1.5), std::pow(2.0, 1.5), 1e-12);
  EXPECT_NEAR(LengthPenalty(7, 1.5), 2.8284, 1e-4);
}

TEST(ViolatesBlockTest, Examples) {
  const std::vector<int> t{0, 1, 2, 0, 1};
  EXPECT_TRUE(ViolatesBlock(t, 2, 3));
  EXPECT_FALSE(ViolatesBlock(t, 1, 3));
  EXPECT_FALSE(ViolatesBlock(std::vector<int>{0}, 0, 3));
  EXPECT_FALSE(ViolatesBlock(t, 2, 0));
  EXPECT_TRUE(ViolatesBlock(std::vector<int>{4}, 4, 1));
}

TEST(DecodeConfigTest, Validation) {
  DecodeConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.beam_width = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.alpha = -1;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.max_len = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
}

TEST(BeamSearchTest, WidthOneIsGreedy) {
  for (int i = 0; i < 50; ++i) {
    RandomStepModel model(6, 3, 1000 + i);
    DecodeConfig cfg;
    cfg.beam_width = 1;
    cfg.max_len = 12;
    const Hypothesis b = BeamSearch(model, cfg);
    const Hypothesis g = Greedy(model, cfg);
    ASSERT_EQ(b.tokens, g.tokens);
    ASSERT_EQ(b.logprob, g.logprob);
    ASSERT_EQ(b.finished, g.finished);
  }
}

TEST(BeamSearchTest, BlockingHolds) {
  for (int i = 0; i < 100; ++i) {
    RandomStepModel model(5, 4, 2000 + i, 0.5);
    DecodeConfig cfg;
    cfg.beam_width = 1 + i % 5;
    cfg.max_len = 30;
    const Hypothesis h = BeamSearch(model, cfg);
    ASSERT_FALSE(HasRepeatedNGram(h.tokens, 3));
    ASSERT_LE(static_cast<int>(h.tokens.size()), cfg.max_len);
    if (h.finished) ASSERT_EQ(h.tokens.back(), 4);
    ASSERT_LE(h.logprob, 0.0);
  }
}

// First token "a" is likely but leads nowhere; "b" is followed by EOS.
TableStepModel TrapModel() {
  TableStepModel m(3, 2, {0.34, 0.33, 0.33});
  m.Set({}, {0.6, 0.4, 0.0});
  m.Set({0}, {0.4, 0.3, 0.3});
  m.Set({1}, {0.005, 0.005, 0.99});
  return m;
}

TEST(BeamSearchTest, TrapModelNeedsWidthTwo) {
  const TableStepModel m = TrapModel();
  DecodeConfig cfg;
  cfg.max_len = 4;
  cfg.beam_width = 2;
  const Hypothesis oracle = BestSequenceBruteforce(m, cfg);
  EXPECT_EQ(oracle.tokens, (std::vector<int>{1, 2}));
  EXPECT_EQ(BeamSearch(m, cfg).tokens, oracle.tokens);
  EXPECT_NE(Greedy(m, cfg).tokens, oracle.tokens);
}

TEST(BeamSearchTest, BlockingForcesSecondBest) {
  // Unconstrained best is a b a b EOS, which repeats the bigram (a, b).
  TableStepModel m(3, 2, {0.3, 0.3, 0.4});
  m.Set({}, {0.94, 0.05, 0.01});
  m.Set({0}, {0.05, 0.94, 0.01});
  m.Set({0, 1}, {0.9, 0.05, 0.05});
  m.Set({0, 1, 0}, {0.05, 0.9, 0.05});
  DecodeConfig cfg;
  cfg.max_len = 5;
  cfg.alpha = 0.0;
  cfg.block_n = 0;
  cfg.beam_width = 81;
  const Hypothesis free = BestSequenceBruteforce(m, cfg);
  EXPECT_EQ(free.tokens, (std::vector<int>{0, 1, 0, 1, 2}));
  cfg.block_n = 2;
  const Hypothesis blocked = BestSequenceBruteforce(m, cfg);
  EXPECT_FALSE(HasRepeatedNGram(blocked.tokens, 2));
  EXPECT_EQ(blocked.tokens, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(BeamSearch(m, cfg).tokens, blocked.tokens);
}

TEST(BeamSearchTest, ExhaustiveWidthMatchesOracle) {
  for (int i = 0; i < 40; ++i) {
    RandomStepModel model(4, 3, 3000 + i, 1.0 + 0.1 * i);
    DecodeConfig cfg;
    cfg.max_len = 5;
    cfg.block_n = i % 4;
    cfg.alpha = (i % 3) * 0.75;
    cfg.beam_width = 4 * 4 * 4 * 4 * 4;
    const Hypothesis want = BestSequenceBruteforce(model, cfg);
    const Hypothesis got = BeamSearch(model, cfg);
    ASSERT_EQ(got.tokens, want.tokens) << i;
    ASSERT_NEAR(got.logprob, want.logprob, 1e-12);
  }
}

// Pruning gives no monotonicity in width: here the greedy path leaves the
// width-2 beam and a worse finished hypothesis is returned.
TEST(BeamSearchTest, WiderBeamCanScoreLower) {
  RandomStepModel model(6, 5, 10012, 1.5);
  DecodeConfig cfg;
  cfg.max_len = 8;
  cfg.beam_width = 1;
  const Hypothesis narrow = BeamSearch(model, cfg);
  cfg.beam_width = 2;
  const Hypothesis wide = BeamSearch(model, cfg);
  EXPECT_FALSE(narrow.finished);
  EXPECT_EQ(narrow.tokens, (std::vector<int>{2, 1, 4, 3, 4, 4, 0, 4}));
  EXPECT_LT(HypothesisScore(wide, cfg.alpha), HypothesisScore(narrow, cfg.alpha));
}

TEST(BeamSearchTest, OracleRejectsOverBudget) {
  RandomStepModel big(9, 3, 1);
  DecodeConfig cfg;
  cfg.max_len = 3;
  EXPECT_THROW(BestSequenceBruteforce(big, cfg), std::length_error);
}

TEST(SeasonStepModelTest, DistributionAndBans) {
  const std::vector<Example> raw = {
      {"v", "acme shares rose 3 points traders watched quietly rain fell", ""}};
  const Vocab vocab = BuildVocab(raw, 100);
  const auto batch = testing::TinyBatch(vocab);
  const Parameters p(testing::TinyConfig(vocab.size()));
  SeasonStepModel m(p, batch[0].input_ids, 0.5);
  const auto lp = m.NextLogProbs(std::vector<int>{7, 8});
  double z = 0;
  for (double x : lp) z += std::exp(x);
  EXPECT_NEAR(z, 1.0, 1e-12);
  for (int banned : {kPadId, kBosId, kMarkerId}) {
    EXPECT_EQ(lp[banned], -std::numeric_limits<double>::infinity());
  }
  EXPECT_EQ(m.sharpened().size(), m.predicted().size());

  DecodeConfig cfg;
  cfg.max_len = 6;
  for (int beam : {1, 3}) {
    cfg.beam_width = beam;
    const auto ids = SummarizeIds(p, batch[0].input_ids, cfg);
    EXPECT_LE(ids.size(), 6u);
    for (int id : ids) {
      EXPECT_NE(id, kEosId);
      EXPECT_NE(id, kMarkerId);
    }
    EXPECT_EQ(ids, SummarizeIds(p, batch[0].input_ids, cfg));
  }
}

}  // namespace
}  // namespace season
