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

#ifndef SEASON_ORACLES_H_
#define SEASON_ORACLES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "season/decode.h"

// Exponential-time reference implementations. They deliberately share no
// code with the production metrics, transport solver or beam search (only
// the StepModel interface and plain data types), and reject inputs beyond
// their budget with std::length_error.
namespace season::oracles {

struct OracleBudget {
  int max_len = 8;
  int max_alphabet = 8;
  long max_plans = 2'000'000;
};

// Longest common subsequence by enumerating every subsequence of `a`.
int LcsBruteforce(const std::vector<std::string>& a,
                  const std::vector<std::string>& b,
                  const OracleBudget& budget = {});

// ROUGE-N overlap by pairing each candidate n-gram with the first unused,
// equal reference n-gram in a linear scan.
double RougeNF1Bruteforce(const std::vector<std::string>& cand,
                          const std::vector<std::string>& ref, int n);
double RougeLF1Bruteforce(const std::vector<std::string>& cand,
                          const std::vector<std::string>& ref);

struct AlignmentCounts {
  int matches = 0;
  int chunks = 0;
};

// Enumerates every one-to-one exact-match alignment; maximizes matches, then
// minimizes chunks. Sequences up to 7 tokens by default.
AlignmentCounts MeteorAlignmentBruteforce(const std::vector<std::string>& cand,
                                          const std::vector<std::string>& ref,
                                          const OracleBudget& budget = {7, 7, 5'000'000});
double MeteorScoreFromAlignment(const AlignmentCounts& counts,
                                std::size_t cand_len, std::size_t ref_len);

// Minimum transport cost over every plan on the 0.25 grid, then improved by
// continuous moves around 2x2 cycles. At most 3 points per side; masses must
// be multiples of 0.25 summing to 1. `costs` is row-major p.size() x q.size().
double WmdBruteforce(const std::vector<double>& p, const std::vector<double>& q,
                     const std::vector<double>& costs);

// Enumerates every generated sequence up to cfg.max_len, drops those that
// repeat a cfg.block_n-gram, and scores those ending in EOS together with
// those cut off at max_len by logprob / ((5 + len) / 6)^alpha. Returns the
// best (ties to the smaller sequence). Vocabulary <= 4 and max_len <= 5 by default.
Hypothesis BestSequenceBruteforce(const StepModel& model, const DecodeConfig& cfg,
                                  const OracleBudget& budget = {5, 4, 2'000'000});

// Deterministic random autoregressive model: the next-token distribution is
// a softmax of normal(0, scale) logits drawn from a generator seeded by the
// model seed and the prefix.
class RandomStepModel : public StepModel {
 public:
  RandomStepModel(int vocab, int eos, std::uint64_t seed, double scale = 2.0)
      : vocab_(vocab), eos_(eos), seed_(seed), scale_(scale) {}
  int vocab_size() const override { return vocab_; }
  int eos_id() const override { return eos_; }
  std::vector<double> NextLogProbs(std::span<const int> prefix) const override;

 private:
  int vocab_;
  int eos_;
  std::uint64_t seed_;
  double scale_;
};

}  // namespace season::oracles

#endif  // SEASON_ORACLES_H_
