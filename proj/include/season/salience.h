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

#ifndef SEASON_SALIENCE_H_
#define SEASON_SALIENCE_H_

#include <vector>

#include "season/textcore.h"

namespace season {

// Default degree count and ROUGE-L F1 cut-points.
inline constexpr int kDefaultSalienceDegrees = 4;
inline const std::vector<double> kDefaultSalienceThresholds = {0.1, 0.3, 0.5};

struct SalienceAllocation {
  std::vector<double> scores;  // ROUGE-L F1 of each sentence vs the summary
  std::vector<int> levels;     // degree in [0, K)
  int degrees = kDefaultSalienceDegrees;
};

// One row of K probabilities per sentence.
using SalienceDistribution = std::vector<std::vector<double>>;

// Element i is RougeL(sentences[i], reference).f1. Throws
// std::invalid_argument on an empty sentence list.
std::vector<double> SentenceSalienceScores(
    const std::vector<TokenSeq>& sentences, const TokenSeq& reference);

// level = number of thresholds <= score (closed on the left). Thresholds must
// be strictly ascending inside (0, 1).
std::vector<int> AllocateLevels(const std::vector<double>& scores,
                                const std::vector<double>& thresholds);

SalienceAllocation AllocateSalience(const std::vector<TokenSeq>& sentences,
                                    const TokenSeq& reference,
                                    const std::vector<double>& thresholds);

// q_i = p_i^(1/T) / sum_j p_j^(1/T). Computed in log space so small
// temperatures stay finite. Throws on all-zero or negative input or T <= 0.
std::vector<double> Sharpen(const std::vector<double>& probs, double temperature);

// sum_i probs[i] * table[i]. probs must sum to 1 within 1e-6.
std::vector<double> ExpectedSalienceEmbedding(
    const std::vector<double>& probs,
    const std::vector<std::vector<double>>& table);

}  // namespace season

#endif  // SEASON_SALIENCE_H_
