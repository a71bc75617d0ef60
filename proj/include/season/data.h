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

#ifndef SEASON_DATA_H_
#define SEASON_DATA_H_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "season/metrics.h"
#include "season/salience.h"

namespace season {

// Reserved vocabulary ids.
inline constexpr int kPadId = 0;
inline constexpr int kUnkId = 1;
inline constexpr int kBosId = 2;
inline constexpr int kEosId = 3;
inline constexpr int kMarkerId = 4;
inline constexpr int kReservedTokens = 5;

struct Example {
  std::string id;
  std::string document;
  std::string summary;
};

struct DatasetProfile {
  std::string name;
  int max_src_tokens = 512;
  int max_tgt_tokens = 100;
};

// cnndm (512, 100), samsum (256, 50), edt (512, 40). "custom" returns the
// cnndm limits for the caller to override. Throws ConfigError otherwise.
DatasetProfile ProfileByName(const std::string& name);
// Throws ConfigError when a limit is below 8.
void ValidateProfile(const DatasetProfile& profile);

class Vocab {
 public:
  // Reserved tokens only.
  Vocab();
  // `tokens` must start with the five reserved tokens.
  explicit Vocab(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  int Id(const std::string& token) const;  // kUnkId when absent
  const std::string& Token(int id) const;
  bool Contains(const std::string& token) const { return index_.count(token) > 0; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  static const std::vector<std::string>& ReservedTokens();

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

struct PreprocessedExample {
  std::string id;
  std::vector<int> input_ids;   // marker before each sentence, optional EOS
  std::vector<int> target_ids;  // BOS ... EOS
  std::vector<int> sentence_of_token;
  std::vector<int> levels;      // one per surviving sentence
  std::vector<double> scores;   // matching ROUGE-L F1 scores
  int unk_count = 0;
  int token_count = 0;
};

// JSON-lines {id, document, summary}. Blank lines are skipped. Throws
// DataError with the 1-based line number on malformed records or duplicate
// ids. With require_summary false a missing summary reads as empty.
std::vector<Example> LoadCorpus(const std::string& path,
                                bool require_summary = true);
void WriteCorpus(const std::string& path, const std::vector<Example>& corpus);

// JSON-lines {id, summary} as written by the summarize command.
std::vector<std::pair<std::string, std::string>> LoadSummaries(
    const std::string& path);

// Most frequent cap - 5 tokens (ties: lexicographically smaller first) after
// the reserved ones. Counts come from documents and summaries.
Vocab BuildVocab(const std::vector<Example>& corpus, int cap);

std::vector<int> Encode(const Vocab& vocab, const TokenSeq& tokens,
                        int* unk_count = nullptr);

// Sentences of the document as the model sees them: newline turns, then the
// rule-based splitter, dropping sentences with no tokens.
std::vector<TokenSeq> DocumentSentences(const std::string& document);

SalienceAllocation OracleSalience(const Example& example,
                                  const std::vector<double>& thresholds);

// Inserts a marker before each sentence and truncates both sides to the
// profile's limits, specials included. A marker is only emitted when a
// token can follow it; the source ends with EOS when room remains.
// Oracle levels come from the untruncated sentences and are clipped to the
// surviving ones. Throws DataError when no sentence survives.
PreprocessedExample Preprocess(const Example& example,
                               const DatasetProfile& profile,
                               const Vocab& vocab,
                               const std::vector<double>& thresholds);

// "token v1 ... vd" per line; d fixed by the first line.
EmbeddingTable LoadEmbeddings(const std::string& path);
// "token weight" per line.
void LoadIdf(const std::string& path, EmbeddingTable* table);

// Copy-style corpus: the summary restates the lead sentence; the remaining
// sentences share no tokens with it, so the lead always gets the top
// salience degree and the rest degree 0.
std::vector<Example> SyntheticCorpus(int count, std::uint64_t seed,
                                     const std::string& id_prefix = "syn");

}  // namespace season

#endif  // SEASON_DATA_H_
