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

#ifndef SEASON_METRICS_H_
#define SEASON_METRICS_H_

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "season/textcore.h"
#include "season/transport.h"

namespace season {

// Precision/recall/F1 triple, every field in [0, 1].
struct MetricScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static MetricScore FromPR(double p, double r) {
    return {p, r, p + r > 0 ? 2.0 * p * r / (p + r) : 0.0};
  }
};

// Static token embeddings with optional idf weights. Immutable once loaded.
class EmbeddingTable {
 public:
  static constexpr const char* kUnknownToken = "<unk>";

  EmbeddingTable() = default;
  explicit EmbeddingTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool has_idf() const { return !idf_.empty(); }

  // Throws std::invalid_argument on dimension mismatch.
  void Add(const std::string& token, std::vector<double> vec);
  // Throws std::invalid_argument on a negative weight.
  void SetIdf(const std::string& token, double weight);

  bool Contains(const std::string& token) const;
  // Falls back to the "<unk>" entry; throws std::out_of_range otherwise.
  const std::vector<double>& Lookup(const std::string& token) const;
  // 1.0 when the token has no idf entry.
  double Idf(const std::string& token) const;
  std::vector<std::string> SortedTokens() const;

 private:
  int dim_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::unordered_map<std::string, double> idf_;
};

// Zero denominators yield 0.
MetricScore RougeN(const TokenSeq& cand, const TokenSeq& ref, int n);
MetricScore RougeL(const TokenSeq& cand, const TokenSeq& ref);
// Sentence-level union-LCS. Hits are clipped by the remaining token counts of
// both texts, so a candidate token is never credited twice.
MetricScore RougeLsum(const std::string& cand, const std::string& ref);

struct MeteorResult {
  int matches = 0;
  int chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double score = 0.0;
  bool exhaustive = true;  // false when the greedy fallback was used
};

// Exact-match METEOR: maximum matches, then minimum chunks among maximal
// alignments. Fmean = 10PR/(R+9P), penalty = 0.5 (ch/m)^3.
MeteorResult MeteorDetailed(const TokenSeq& cand, const TokenSeq& ref);
double Meteor(const TokenSeq& cand, const TokenSeq& ref);
// Score from (m, ch) and lengths; shared with the enumeration oracle.
MeteorResult MeteorFromCounts(int matches, int chunks, std::size_t cand_len,
                              std::size_t ref_len);

double CosineSimilarity(const std::vector<double>& a,
                        const std::vector<double>& b);

// Greedy max-cosine matching with negative cosines clamped to 0. Throws
// std::invalid_argument on an empty sequence.
MetricScore BertScore(const TokenSeq& cand, const TokenSeq& ref,
                      const EmbeddingTable& emb, bool use_idf);

struct MoverDetail {
  TransportProblem problem;
  TransportPlan plan;
  std::vector<std::string> cand_types;
  std::vector<std::string> ref_types;
};

// Exact word mover's distance between the idf-weighted unigram distributions.
double WordMoversDistance(const TokenSeq& cand, const TokenSeq& ref,
                          const EmbeddingTable& emb,
                          MoverDetail* detail = nullptr);
// 1 / (1 + WMD).
double MoverScore(const TokenSeq& cand, const TokenSeq& ref,
                  const EmbeddingTable& emb);

// n-grams of `summary` absent from `source` (set semantics).
std::set<NGram> NovelNGrams(const TokenSeq& summary, const TokenSeq& source,
                            int n);

}  // namespace season

#endif  // SEASON_METRICS_H_
