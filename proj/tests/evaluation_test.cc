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

#include "season/evaluation.h"

#include <omp.h>

#include "gtest/gtest.h"
#include "season/data.h"
#include "season/errors.h"
#include "test_util.h"

namespace season {
namespace {

EvalReport MakeReport(const std::string& sys, std::vector<double> v) {
  EvalReport r;
  r.system = sys;
  r.dataset = "D";
  for (std::size_t i = 0; i < v.size(); ++i) r.scores.emplace_back(MetricKeys()[i], v[i]);
  return r;
}

TEST(EvaluationTest, IdentityGivesFullRouge) {
  std::vector<TextPair> pairs;
  for (const auto& ex : SyntheticCorpus(10, 2)) pairs.push_back({ex.document, ex.document});
  EvalOptions opts;
  opts.metrics = {"rouge1", "rouge2", "rougeL", "rougeLsum", "meteor"};
  const auto rows = ScoreExamplesSerial(pairs, opts);
  const EvalReport r = Aggregate("s", "d", opts.metrics, rows);
  EXPECT_DOUBLE_EQ(r.Get("rouge1"), 100.0);
  EXPECT_DOUBLE_EQ(r.Get("rouge2"), 100.0);
  EXPECT_DOUBLE_EQ(r.Get("rougeL"), 100.0);
  EXPECT_DOUBLE_EQ(r.Get("rougeLsum"), 100.0);
  EXPECT_LT(r.Get("meteor"), 100.0);
}

TEST(EvaluationTest, PoliceExampleInPercent) {
  EvalOptions opts;
  opts.metrics = {"rouge1"};
  const auto rows =
      ScoreExamplesSerial({{"police kill the gunman", "police killed the gunman"}}, opts);
  EXPECT_DOUBLE_EQ(Aggregate("s", "", opts.metrics, rows).Get("rouge1"), 75.0);
}

TEST(EvaluationTest, ParallelMatchesSerialExactly) {
  const auto corpus = SyntheticCorpus(64, 12);
  std::vector<TextPair> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    pairs.push_back({corpus[i].summary, corpus[(i * 7) % corpus.size()].document});
  }
  EmbeddingTable emb(2);
  emb.Add("<unk>", {1, 1});
  emb.Add("shares", {1, 0});
  emb.Add("on", {0, 1});
  EvalOptions opts;
  opts.embeddings = &emb;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto par = ScoreExamplesParallel(pairs, opts);
  omp_set_num_threads(saved);
  EXPECT_EQ(par, ScoreExamplesSerial(pairs, opts));
}

TEST(EvaluationTest, OptionValidation) {
  EvalOptions opts;
  EXPECT_THROW(ValidateEvalOptions(opts), ConfigError);  // embeddings missing
  opts.metrics = {"rouge1", "bleu"};
  EXPECT_THROW(ValidateEvalOptions(opts), ConfigError);
  opts.metrics = {"rouge1", "rouge1"};
  EXPECT_THROW(ValidateEvalOptions(opts), ConfigError);
  opts.metrics = {"meteor"};
  EXPECT_NO_THROW(ValidateEvalOptions(opts));
}

TEST(EvaluationTest, MissingEmbeddingIsDataError) {
  EmbeddingTable emb(1);
  emb.Add("a", {1});
  EvalOptions opts;
  opts.metrics = {"bertscore"};
  opts.embeddings = &emb;
  EXPECT_THROW(ScoreExamplesSerial({{"a b", "a"}}, opts), DataError);
  EXPECT_THROW(ScoreExamplesParallel({{"a b", "a"}}, opts), DataError);
}

TEST(ReportTest, JsonRoundTripAndValidation) {
  const EvalReport r = MakeReport("S", {10, 20, 30, 40, 50, 60, 70});
  const EvalReport back = ReportFromJson(ReportToJson(r), "mem");
  EXPECT_EQ(back.system, "S");
  EXPECT_EQ(back.scores, r.scores);
  EXPECT_THROW(MakeReport("bad", {101}).Validate(), DataError);
  EXPECT_THROW(MakeReport("bad", {-0.5}).Validate(), DataError);
  EXPECT_THROW(ReportFromJson("{\"system\":\"x\",\"scores\":{\"bleu\":3}}", "mem"),
               DataError);
  EXPECT_THROW(ReportFromJson("{\"system\":\"x\",\"scores\":{\"rouge1\":101}}", "mem"),
               DataError);
}

TEST(RenderTableTest, TiesMarkAll) {
  const EvalReport a = MakeReport("A", {10, 20, 30});
  const EvalReport b = MakeReport("B", {10, 25, 5});
  const std::string t = RenderTable({a, b});
  EXPECT_NE(t.find("A      10.00 20.00 30.00  *.*"), std::string::npos) << t;
  EXPECT_NE(t.find("B      10.00 25.00  5.00  **."), std::string::npos) << t;
  const std::string same = RenderTable({a, a});
  EXPECT_EQ(same.find(".."), std::string::npos);
}

TEST(RenderTableTest, ColumnMismatchRejected) {
  EXPECT_THROW(RenderTable({MakeReport("A", {1, 2}), MakeReport("B", {1, 2, 3})}),
               DataError);
}

TEST(RenderTableTest, StoredTableRow) {
  const auto reports = LoadReports(testing::SourcePath("data/table1.json"));
  ASSERT_EQ(reports.size(), 12u);
  const std::string t = RenderTable(reports);
  EXPECT_NE(t.find("EDT      SEASON     52.91 34.64 48.15 48.15 51.20 90.58 35.43  *******"),
            std::string::npos)
      << t;
}

}  // namespace
}  // namespace season
