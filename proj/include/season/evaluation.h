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

#ifndef SEASON_EVALUATION_H_
#define SEASON_EVALUATION_H_

#include <string>
#include <utility>
#include <vector>

#include "season/metrics.h"

namespace season {

// Canonical metric keys, in table order: rouge1 rouge2 rougeL rougeLsum
// meteor bertscore moverscore.
const std::vector<std::string>& MetricKeys();
// Short column labels, same order.
const std::vector<std::string>& MetricLabels();
bool IsEmbeddingMetric(const std::string& key);

struct EvalOptions {
  std::vector<std::string> metrics = MetricKeys();
  const EmbeddingTable* embeddings = nullptr;  // required by embedding metrics
  bool use_idf = false;
};

// Throws ConfigError on unknown or duplicate metric keys, or an embedding
// metric without embeddings.
void ValidateEvalOptions(const EvalOptions& options);

struct TextPair {
  std::string candidate;
  std::string reference;
};

// One row per pair, one F1 value in [0, 1] per requested metric. Throws
// DataError when a token has no embedding and no "<unk>" fallback exists.
std::vector<std::vector<double>> ScoreExamplesSerial(
    const std::vector<TextPair>& pairs, const EvalOptions& options);
// OpenMP over examples; identical results to the serial path.
std::vector<std::vector<double>> ScoreExamplesParallel(
    const std::vector<TextPair>& pairs, const EvalOptions& options);

struct EvalReport {
  std::string system;
  std::string dataset;
  int examples = 0;
  std::vector<std::pair<std::string, double>> scores;  // percent, canonical order

  // Throws DataError on unknown keys or values outside [0, 100].
  void Validate() const;
  bool Has(const std::string& key) const;
  double Get(const std::string& key) const;
};

// Per-example means in percent.
EvalReport Aggregate(const std::string& system, const std::string& dataset,
                     const std::vector<std::string>& metrics,
                     const std::vector<std::vector<double>>& per_example);

std::string ReportToJson(const EvalReport& report);
// Accepts a single report object. Throws DataError.
EvalReport ReportFromJson(const std::string& text, const std::string& origin);
// A JSON array of reports, or a single report. Throws DataError.
std::vector<EvalReport> LoadReports(const std::string& path);

// Rows grouped into blocks by dataset (first-appearance order). Each score
// is printed with two decimals in a 5-wide column separated by one space;
// the trailing column marks with '*' every metric where the row attains the
// block maximum at printed precision (ties mark all). All reports in a block
// must carry the same metrics. Throws DataError.
std::string RenderTable(const std::vector<EvalReport>& reports);

}  // namespace season

#endif  // SEASON_EVALUATION_H_
