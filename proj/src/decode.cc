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

#include <algorithm>
#include <cmath>
#include <limits>

#include "season/errors.h"

namespace season {

void DecodeConfig::Validate() const {
  if (beam_width < 1) throw ConfigError("beam width must be >= 1");
  if (max_len < 1) throw ConfigError("max length must be >= 1");
  if (!(alpha >= 0.0)) throw ConfigError("length-penalty alpha must be >= 0");
  if (block_n < 0) throw ConfigError("block-n must be >= 0");
  if (!(temperature > 0.0)) throw ConfigError("temperature must be > 0");
}

double LengthPenalty(int length, double alpha) {
  return std::pow((5.0 + length) / 6.0, alpha);
}

bool ViolatesBlock(std::span<const int> tokens, int next, int n) {
  if (n <= 0) return false;
  const auto len = static_cast<int>(tokens.size());
  if (len < n) return false;  // need n-1 context plus one earlier n-gram
  // Candidate n-gram: tokens[len-n+1 .. len-1] + next.
  for (int start = 0; start + n <= len; ++start) {
    bool same = tokens[start + n - 1] == next;
    for (int k = 0; same && k < n - 1; ++k) {
      same = tokens[start + k] == tokens[len - n + 1 + k];
    }
    if (same) return true;
  }
  return false;
}

double HypothesisScore(const Hypothesis& h, double alpha) {
  return h.logprob / LengthPenalty(static_cast<int>(h.tokens.size()), alpha);
}

bool BetterHypothesis(const Hypothesis& a, const Hypothesis& b, double alpha) {
  const double sa = HypothesisScore(a, alpha);
  const double sb = HypothesisScore(b, alpha);
  if (sa != sb) return sa > sb;
  return a.tokens < b.tokens;
}

namespace {

void CheckDistribution(const std::vector<double>& lp, int vocab) {
  if (static_cast<int>(lp.size()) != vocab) {
    throw std::invalid_argument("step model returned wrong vocabulary width");
  }
}

const Hypothesis& Best(const std::vector<Hypothesis>& pool, double alpha) {
  return *std::min_element(pool.begin(), pool.end(),
                           [alpha](const Hypothesis& a, const Hypothesis& b) {
                             return BetterHypothesis(a, b, alpha);
                           });
}

}  // namespace

Hypothesis BeamSearch(const StepModel& model, const DecodeConfig& cfg) {
  cfg.Validate();
  const int vocab = model.vocab_size();
  const int eos = model.eos_id();
  std::vector<Hypothesis> live(1);
  std::vector<Hypothesis> finished;
  for (int step = 0; step < cfg.max_len && !live.empty(); ++step) {
    std::vector<Hypothesis> candidates;
    for (const auto& h : live) {
      const std::vector<double> lp = model.NextLogProbs(h.tokens);
      CheckDistribution(lp, vocab);
      for (int v = 0; v < vocab; ++v) {
        if (lp[v] == -std::numeric_limits<double>::infinity()) continue;
        if (ViolatesBlock(h.tokens, v, cfg.block_n)) continue;
        Hypothesis c;
        c.tokens = h.tokens;
        c.tokens.push_back(v);
        c.logprob = h.logprob + lp[v];
        c.finished = v == eos;
        candidates.push_back(std::move(c));
      }
    }
    const std::size_t keep =
        std::min(candidates.size(), static_cast<std::size_t>(cfg.beam_width));
    std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(),
                      [](const Hypothesis& a, const Hypothesis& b) {
                        if (a.logprob != b.logprob) return a.logprob > b.logprob;
                        return a.tokens < b.tokens;
                      });
    live.clear();
    for (std::size_t i = 0; i < keep; ++i) {
      if (candidates[i].finished) {
        finished.push_back(std::move(candidates[i]));
      } else {
        live.push_back(std::move(candidates[i]));
      }
    }
  }
  finished.insert(finished.end(), live.begin(), live.end());
  return finished.empty() ? Hypothesis{} : Best(finished, cfg.alpha);
}

Hypothesis Greedy(const StepModel& model, const DecodeConfig& cfg) {
  cfg.Validate();
  const int vocab = model.vocab_size();
  Hypothesis h;
  while (static_cast<int>(h.tokens.size()) < cfg.max_len) {
    const std::vector<double> lp = model.NextLogProbs(h.tokens);
    CheckDistribution(lp, vocab);
    int best = -1;
    for (int v = 0; v < vocab; ++v) {
      if (lp[v] == -std::numeric_limits<double>::infinity()) continue;
      if (ViolatesBlock(h.tokens, v, cfg.block_n)) continue;
      if (best < 0 || lp[v] > lp[best]) best = v;
    }
    if (best < 0) break;
    h.tokens.push_back(best);
    h.logprob += lp[best];
    if (best == model.eos_id()) {
      h.finished = true;
      break;
    }
  }
  return h;
}

SeasonStepModel::SeasonStepModel(const Parameters& params,
                                 std::span<const int> input_ids,
                                 double temperature)
    : params_(params), enc_(EncodeDocument(params, input_ids)) {
  predicted_ = PredictSalience(params, enc_);
  SalienceDistribution sharp;
  sharp.reserve(predicted_.size());
  for (const auto& row : predicted_) sharp.push_back(Sharpen(row, temperature));
  guide_ = SalienceGuide::Soft(std::move(sharp));
}

std::vector<double> SeasonStepModel::NextLogProbs(std::span<const int> prefix) const {
  std::vector<int> dec_in;
  dec_in.reserve(prefix.size() + 1);
  dec_in.push_back(kBosId);
  dec_in.insert(dec_in.end(), prefix.begin(), prefix.end());
  const Matrix logits = DecoderLogits(params_, enc_, dec_in, guide_);
  const double* last = logits.row(logits.rows - 1);
  const int vocab = logits.cols;
  // Special tokens are masked before normalization.
  std::vector<double> out(last, last + vocab);
  for (int banned : {kPadId, kBosId, kMarkerId}) {
    out[banned] = -std::numeric_limits<double>::infinity();
  }
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : out) mx = std::max(mx, x);
  double total = 0.0;
  for (double x : out) total += std::exp(x - mx);
  const double log_z = mx + std::log(total);
  for (double& x : out) x -= log_z;
  return out;
}

std::vector<int> SummarizeIds(const Parameters& params,
                              std::span<const int> input_ids,
                              const DecodeConfig& cfg) {
  SeasonStepModel model(params, input_ids, cfg.temperature);
  Hypothesis h = cfg.beam_width == 1 ? Greedy(model, cfg) : BeamSearch(model, cfg);
  if (!h.tokens.empty() && h.tokens.back() == kEosId) h.tokens.pop_back();
  return h.tokens;
}

}  // namespace season
