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

#ifndef SEASON_DECODE_H_
#define SEASON_DECODE_H_

#include <span>
#include <vector>

#include "season/model.h"

namespace season {

struct DecodeConfig {
  int beam_width = 5;
  double alpha = 1.5;        // length-penalty exponent
  int block_n = 3;           // 0 disables n-gram blocking
  int max_len = 100;         // generated tokens, EOS included
  double temperature = 0.5;  // salience sharpening

  // Throws ConfigError.
  void Validate() const;
};

struct Hypothesis {
  std::vector<int> tokens;  // generated ids; ends with EOS when finished
  double logprob = 0.0;
  bool finished = false;
};

// Autoregressive next-token distribution over generated prefixes.
class StepModel {
 public:
  virtual ~StepModel() = default;
  virtual int vocab_size() const = 0;
  virtual int eos_id() const = 0;
  // Log-probabilities (size vocab_size; -inf for impossible tokens).
  virtual std::vector<double> NextLogProbs(std::span<const int> prefix) const = 0;
};

// ((5 + length) / 6)^alpha.
double LengthPenalty(int length, double alpha);

// True iff appending `next` creates an n-gram already present in `tokens`.
// n == 0 disables blocking.
bool ViolatesBlock(std::span<const int> tokens, int next, int n);

// logprob / LengthPenalty(|tokens|, alpha).
double HypothesisScore(const Hypothesis& h, double alpha);

// Ranking used everywhere: higher score first, then the lexicographically
// smaller token sequence.
bool BetterHypothesis(const Hypothesis& a, const Hypothesis& b, double alpha);

// At each step the top beam_width non-blocked extensions (by cumulative
// logprob, ties to the smaller sequence) are kept; those ending in EOS move
// to the finished pool. Hypotheses still live at max_len are closed there
// and compete with the finished ones; the best by HypothesisScore wins.
Hypothesis BeamSearch(const StepModel& model, const DecodeConfig& cfg);

// Argmax over non-blocked tokens, lower id on ties, until EOS or max_len.
Hypothesis Greedy(const StepModel& model, const DecodeConfig& cfg);

// SEASON inference: encode, predict salience, sharpen each sentence row with
// cfg.temperature and feed the expected salience embedding into every
// cross-attention layer. PAD, BOS and marker tokens are never generated.
class SeasonStepModel : public StepModel {
 public:
  SeasonStepModel(const Parameters& params, std::span<const int> input_ids,
                  double temperature);

  int vocab_size() const override { return params_.config().vocab_size; }
  int eos_id() const override { return kEosId; }
  std::vector<double> NextLogProbs(std::span<const int> prefix) const override;

  const SalienceDistribution& predicted() const { return predicted_; }
  const SalienceDistribution& sharpened() const { return guide_.distribution; }

 private:
  const Parameters& params_;
  EncodedDocument enc_;
  SalienceDistribution predicted_;
  SalienceGuide guide_;
};

// Beam (or greedy when beam_width == 1) decode with EOS stripped.
std::vector<int> SummarizeIds(const Parameters& params,
                              std::span<const int> input_ids,
                              const DecodeConfig& cfg);

}  // namespace season

#endif  // SEASON_DECODE_H_
