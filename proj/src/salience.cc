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

#include "season/salience.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "season/metrics.h"

namespace season {

std::vector<double> SentenceSalienceScores(
    const std::vector<TokenSeq>& sentences, const TokenSeq& reference) {
  if (sentences.empty()) {
    throw std::invalid_argument("SentenceSalienceScores: no sentences");
  }
  std::vector<double> scores;
  scores.reserve(sentences.size());
  for (const auto& s : sentences) scores.push_back(RougeL(s, reference).f1);
  return scores;
}

std::vector<int> AllocateLevels(const std::vector<double>& scores,
                                const std::vector<double>& thresholds) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0 && thresholds[i] < 1.0) ||
        (i > 0 && !(thresholds[i] > thresholds[i - 1]))) {
      throw std::invalid_argument(
          "AllocateLevels: thresholds must be strictly ascending in (0, 1)");
    }
  }
  std::vector<int> levels;
  levels.reserve(scores.size());
  for (double s : scores) {
    levels.push_back(static_cast<int>(
        std::upper_bound(thresholds.begin(), thresholds.end(), s) -
        thresholds.begin()));
  }
  return levels;
}

SalienceAllocation AllocateSalience(const std::vector<TokenSeq>& sentences,
                                    const TokenSeq& reference,
                                    const std::vector<double>& thresholds) {
  SalienceAllocation out;
  out.scores = SentenceSalienceScores(sentences, reference);
  out.levels = AllocateLevels(out.scores, thresholds);
  out.degrees = static_cast<int>(thresholds.size()) + 1;
  return out;
}

std::vector<double> Sharpen(const std::vector<double>& probs, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("Sharpen: temperature must be > 0");
  }
  double max_log = -std::numeric_limits<double>::infinity();
  for (double p : probs) {
    if (p < 0.0 || !std::isfinite(p)) {
      throw std::invalid_argument("Sharpen: probabilities must be finite, >= 0");
    }
    if (p > 0.0) max_log = std::max(max_log, std::log(p));
  }
  if (max_log == -std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("Sharpen: all-zero distribution");
  }
  if (temperature == 1.0) {
    double total = 0.0;
    for (double p : probs) total += p;
    std::vector<double> out(probs);
    // Already-normalized input passes through bit-for-bit.
    if (std::abs(total - 1.0) > 1e-12) {
      for (double& q : out) q /= total;
    }
    return out;
  }
  std::vector<double> out(probs.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) {
      out[i] = std::exp((std::log(probs[i]) - max_log) / temperature);
      total += out[i];
    }
  }
  for (double& q : out) q /= total;
  return out;
}

std::vector<double> ExpectedSalienceEmbedding(
    const std::vector<double>& probs,
    const std::vector<std::vector<double>>& table) {
  if (probs.size() != table.size() || table.empty()) {
    throw std::invalid_argument(
        "ExpectedSalienceEmbedding: probability count != table rows");
  }
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "ExpectedSalienceEmbedding: probabilities must sum to 1");
  }
  const std::size_t dim = table[0].size();
  std::vector<double> out(dim, 0.0);
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].size() != dim) {
      throw std::invalid_argument("ExpectedSalienceEmbedding: ragged table");
    }
    for (std::size_t d = 0; d < dim; ++d) out[d] += probs[k] * table[k][d];
  }
  return out;
}

}  // namespace season
