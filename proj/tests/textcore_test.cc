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

#include "season/textcore.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace season {
namespace {

TEST(TokenizeTest, Basics) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_EQ(Tokenize("Police killed the gunman."),
            (TokenSeq{"police", "killed", "the", "gunman", "."}));
  EXPECT_EQ(Tokenize("  A  b "), (TokenSeq{"a", "b"}));
  EXPECT_EQ(Tokenize("It'll rain, ok?"),
            (TokenSeq{"it", "'", "ll", "rain", ",", "ok", "?"}));
}

TEST(TokenizeTest, NoEmptyOrWhitespaceTokens) {
  for (const auto& tok : Tokenize(" \tHello,\n world!!  caf\xc3\xa9 (x) ")) {
    EXPECT_FALSE(tok.empty());
    EXPECT_EQ(tok.find_first_of(" \t\n\r"), std::string::npos);
  }
  EXPECT_EQ(Tokenize("caf\xc3\xa9"), TokenSeq{"caf\xc3\xa9"});
}

TEST(SplitSentencesTest, Examples) {
  EXPECT_EQ(SplitSentences("Hello. World."),
            (std::vector<std::string>{"Hello.", "World."}));
  EXPECT_EQ(SplitSentences("One sentence"), std::vector<std::string>{"One sentence"});
  EXPECT_EQ(SplitSentences("Dr. Smith left. He ran."),
            (std::vector<std::string>{"Dr. Smith left.", "He ran."}));
  EXPECT_EQ(SplitSentences("Wait... What?! \"Yes.\" Fine"),
            (std::vector<std::string>{"Wait...", "What?! \"Yes.\"", "Fine"}));
  EXPECT_EQ(SplitSentences("prices rose 3.5 percent. then fell."),
            std::vector<std::string>{"prices rose 3.5 percent. then fell."});
  EXPECT_TRUE(SplitSentences("   ").empty());
}

TEST(SplitDocumentTest, TurnsFirst) {
  EXPECT_EQ(SplitDocument("Sally: Hi! How are you?\nTim: Fine"),
            (std::vector<std::string>{"Sally: Hi!", "How are you?", "Tim: Fine"}));
}

TEST(TokenizeSentencesTest, SpansCoverTokens) {
  std::vector<SentenceSpan> spans;
  const TokenSeq toks = TokenizeSentences({"A b.", "C.", "d e f"}, &spans);
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0], (SentenceSpan{0, 3}));
  EXPECT_EQ(spans[1], (SentenceSpan{3, 5}));
  EXPECT_EQ(spans[2], (SentenceSpan{5, 8}));
  EXPECT_EQ(toks.size(), 8u);
}

TEST(NGramsTest, Examples) {
  const TokenSeq aba{"a", "b", "a"};
  EXPECT_EQ(NGrams(aba, 1), (NGramCounts{{{"a"}, 2}, {{"b"}, 1}}));
  EXPECT_EQ(NGrams(aba, 2), (NGramCounts{{{"a", "b"}, 1}, {{"b", "a"}, 1}}));
  EXPECT_TRUE(NGrams({"a"}, 2).empty());
  EXPECT_THROW(NGrams(aba, 0), std::invalid_argument);
}

TEST(LcsTest, Examples) {
  EXPECT_EQ(LcsLength({"a", "b", "c"}, {"a", "b", "c"}), 3u);
  EXPECT_EQ(LcsLength({"A", "B", "C", "B", "D", "A", "B"},
                      {"B", "D", "C", "A", "B", "A"}),
            4u);
  EXPECT_EQ(LcsLength({"a"}, {"b"}), 0u);
  EXPECT_EQ(LcsLength({}, {"b"}), 0u);
}

TEST(LcsTest, PositionsFormCommonSubsequence) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const TokenSeq a = testing::RandomTokens(rng, 0, 12, 4);
    const TokenSeq b = testing::RandomTokens(rng, 0, 12, 4);
    const auto pos = LcsPositions(a, b);
    ASSERT_EQ(pos.size(), LcsLength(a, b));
    TokenSeq sub;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (k) ASSERT_LT(pos[k - 1], pos[k]);
      sub.push_back(a[pos[k]]);
    }
    ASSERT_EQ(LcsLength(sub, b), sub.size());
  }
}

TEST(UnionLcsTest, Examples) {
  EXPECT_EQ(UnionLcs({"a", "b", "c"}, {{"a", "b", "c"}}), 3u);
  EXPECT_EQ(UnionLcs({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), 4u);
  EXPECT_EQ(UnionLcs({"a", "b"}, {}), 0u);
}

TEST(DetokenizeTest, AttachesPunctuation) {
  EXPECT_EQ(Detokenize({"police", "killed", "the", "gunman", "."}),
            "police killed the gunman.");
  EXPECT_EQ(Detokenize({"hi", ",", "(", "you", ")", "!"}), "hi, (you)!");
  EXPECT_EQ(Detokenize({}), "");
}

}  // namespace
}  // namespace season
