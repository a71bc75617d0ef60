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

#include "season/data.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "season/errors.h"
#include "test_util.h"

namespace season {
namespace {

using testing::TempDir;
using testing::WriteFile;

TEST(LoadCorpusTest, ReadsRecordsInOrder) {
  const auto dir = TempDir("corpus");
  WriteFile(dir / "empty.jsonl", "");
  EXPECT_TRUE(LoadCorpus((dir / "empty.jsonl").string()).empty());
  WriteFile(dir / "three.jsonl",
            "{\"id\":\"x\",\"document\":\"A b.\",\"summary\":\"a\"}\n"
            "\n"
            "{\"id\":\"y\",\"document\":\"C d.\",\"summary\":\"c\"}\n"
            "{\"id\":\"z\",\"document\":\"E f.\",\"summary\":\"e\"}\n");
  const auto corpus = LoadCorpus((dir / "three.jsonl").string());
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus[0].id, "x");
  EXPECT_EQ(corpus[2].document, "E f.");
}

TEST(LoadCorpusTest, RejectsMalformedLines) {
  const auto dir = TempDir("corpus_bad");
  WriteFile(dir / "missing.jsonl",
            "{\"id\":\"x\",\"document\":\"A.\",\"summary\":\"a\"}\n"
            "{\"id\":\"y\",\"document\":\"B.\"}\n");
  try {
    LoadCorpus((dir / "missing.jsonl").string());
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("summary"), std::string::npos) << e.what();
  }
  EXPECT_EQ(LoadCorpus((dir / "missing.jsonl").string(), false).size(), 2u);
  WriteFile(dir / "dup.jsonl",
            "{\"id\":\"x\",\"document\":\"A.\",\"summary\":\"a\"}\n"
            "{\"id\":\"x\",\"document\":\"B.\",\"summary\":\"b\"}\n");
  EXPECT_THROW(LoadCorpus((dir / "dup.jsonl").string()), DataError);
  WriteFile(dir / "junk.jsonl", "{not json\n");
  EXPECT_THROW(LoadCorpus((dir / "junk.jsonl").string()), DataError);
  EXPECT_THROW(LoadCorpus((dir / "absent.jsonl").string()), DataError);
}

TEST(CorpusTest, WriteRoundTrips) {
  const auto dir = TempDir("corpus_rt");
  const auto corpus = SyntheticCorpus(5, 3);
  WriteCorpus((dir / "c.jsonl").string(), corpus);
  const auto back = LoadCorpus((dir / "c.jsonl").string());
  ASSERT_EQ(back.size(), corpus.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].id, corpus[i].id);
    EXPECT_EQ(back[i].document, corpus[i].document);
    EXPECT_EQ(back[i].summary, corpus[i].summary);
  }
}

TEST(BuildVocabTest, FrequencyThenLexicographic) {
  const std::vector<Example> corpus{{"1", "a a a b b c", ""}};
  const Vocab v = BuildVocab(corpus, 7);
  ASSERT_EQ(v.size(), 7);
  EXPECT_EQ(v.Token(5), "a");
  EXPECT_EQ(v.Token(6), "b");
  EXPECT_EQ(v.Id("c"), kUnkId);
  const Vocab all = BuildVocab(corpus, 100);
  EXPECT_EQ(all.size(), 8);
  const Vocab tie = BuildVocab({{"1", "z y x", ""}}, 6);
  EXPECT_EQ(tie.Token(5), "x");
  EXPECT_EQ(Vocab::ReservedTokens(),
            (std::vector<std::string>{"<pad>", "<unk>", "<s>", "</s>", "<sent>"}));
}

TEST(ProfileTest, DefaultLimits) {
  EXPECT_EQ(ProfileByName("cnndm").max_src_tokens, 512);
  EXPECT_EQ(ProfileByName("cnndm").max_tgt_tokens, 100);
  EXPECT_EQ(ProfileByName("samsum").max_src_tokens, 256);
  EXPECT_EQ(ProfileByName("samsum").max_tgt_tokens, 50);
  EXPECT_EQ(ProfileByName("edt").max_src_tokens, 512);
  EXPECT_EQ(ProfileByName("edt").max_tgt_tokens, 40);
  EXPECT_THROW(ProfileByName("xsum"), ConfigError);
  EXPECT_THROW(ValidateProfile({"tiny", 4, 40}), ConfigError);
}

TEST(PreprocessTest, OneMarkerPerSentence) {
  const Example ex{"e", "Alpha beta gamma. Delta epsilon.", "alpha beta gamma"};
  const Vocab v = BuildVocab({ex}, 100);
  const auto p = Preprocess(ex, ProfileByName("cnndm"), v, kDefaultSalienceThresholds);
  EXPECT_EQ(std::count(p.input_ids.begin(), p.input_ids.end(), kMarkerId), 2);
  EXPECT_EQ(p.input_ids.front(), kMarkerId);
  EXPECT_EQ(p.input_ids.back(), kEosId);
  EXPECT_EQ(p.levels, (std::vector<int>{3, 0}));
  EXPECT_EQ(p.target_ids.front(), kBosId);
  EXPECT_EQ(p.target_ids.back(), kEosId);
  EXPECT_EQ(p.target_ids.size(), 5u);
  EXPECT_EQ(p.sentence_of_token.size(), p.input_ids.size());
}

TEST(PreprocessTest, TruncatesToExactLimits) {
  std::string doc;
  for (int s = 0; s < 200; ++s) doc += "Word" + std::to_string(s) + " a b c d e f.  ";
  std::string summary;
  for (int i = 0; i < 300; ++i) summary += "w" + std::to_string(i % 50) + " ";
  const Example ex{"long", doc, summary};
  const Vocab v = BuildVocab({ex}, 1000);
  for (const char* name : {"cnndm", "samsum", "edt"}) {
    const DatasetProfile prof = ProfileByName(name);
    const auto p = Preprocess(ex, prof, v, kDefaultSalienceThresholds);
    EXPECT_EQ(static_cast<int>(p.input_ids.size()), prof.max_src_tokens) << name;
    EXPECT_EQ(static_cast<int>(p.target_ids.size()), prof.max_tgt_tokens) << name;
    const auto markers = std::count(p.input_ids.begin(), p.input_ids.end(), kMarkerId);
    EXPECT_EQ(static_cast<std::size_t>(markers), p.levels.size()) << name;
    EXPECT_EQ(p.levels.size(), p.scores.size());
  }
}

TEST(PreprocessTest, NoSentencesIsDataError) {
  const Vocab v;
  EXPECT_THROW(Preprocess({"e", "   ", "x"}, ProfileByName("edt"), v,
                          kDefaultSalienceThresholds),
               DataError);
}

TEST(LoadEmbeddingsTest, ParsesAndValidates) {
  const auto dir = TempDir("emb");
  WriteFile(dir / "one.txt", "a 1 0\n");
  const EmbeddingTable one = LoadEmbeddings((dir / "one.txt").string());
  EXPECT_EQ(one.dim(), 2);
  EXPECT_EQ(one.Lookup("a"), (std::vector<double>{1, 0}));
  WriteFile(dir / "bad.txt", "a 1 0\nb 1\n");
  EXPECT_THROW(LoadEmbeddings((dir / "bad.txt").string()), DataError);
  WriteFile(dir / "nan.txt", "a 1 x\n");
  EXPECT_THROW(LoadEmbeddings((dir / "nan.txt").string()), DataError);

  std::string text;
  std::set<std::string> tokens;
  for (int i = 0; i < 100; ++i) {
    const std::string tok = "tok" + std::to_string(i);
    tokens.insert(tok);
    text += tok + " " + std::to_string(i * 0.5) + " -1.25 3e-2\n";
  }
  WriteFile(dir / "hundred.txt", text);
  const EmbeddingTable t = LoadEmbeddings((dir / "hundred.txt").string());
  const auto keys = t.SortedTokens();
  EXPECT_EQ(std::set<std::string>(keys.begin(), keys.end()), tokens);
  EXPECT_EQ(t.Lookup("tok3")[0], 1.5);

  WriteFile(dir / "idf.txt", "a 2.5\n");
  EmbeddingTable with_idf = one;
  LoadIdf((dir / "idf.txt").string(), &with_idf);
  EXPECT_EQ(with_idf.Idf("a"), 2.5);
  WriteFile(dir / "neg.txt", "a -1\n");
  EXPECT_THROW(LoadIdf((dir / "neg.txt").string(), &with_idf), DataError);
}

TEST(SyntheticCorpusTest, LeadIsMostSalient) {
  const auto corpus = SyntheticCorpus(50, 21);
  ASSERT_EQ(corpus.size(), 50u);
  for (const auto& ex : corpus) {
    const auto a = OracleSalience(ex, kDefaultSalienceThresholds);
    ASSERT_GE(a.levels.size(), 3u);
    EXPECT_EQ(a.levels[0], kDefaultSalienceDegrees - 1) << ex.document;
    for (std::size_t i = 1; i < a.levels.size(); ++i) EXPECT_EQ(a.levels[i], 0);
  }
  EXPECT_EQ(SyntheticCorpus(5, 21)[3].document, corpus[3].document);
}

}  // namespace
}  // namespace season
