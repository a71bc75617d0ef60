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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "season/errors.h"

namespace season {
namespace {

using json = nlohmann::json;

int MetricIndex(const std::string& key) {
  const auto& keys = MetricKeys();
  auto it = std::find(keys.begin(), keys.end(), key);
  return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
}

double ScoreOne(const std::string& metric, const TokenSeq& cand, const TokenSeq& ref,
                const TextPair& pair, const EvalOptions& options) {
  if (metric == "rouge1") return RougeN(cand, ref, 1).f1;
  if (metric == "rouge2") return RougeN(cand, ref, 2).f1;
  if (metric == "rougeL") return RougeL(cand, ref).f1;
  if (metric == "rougeLsum") return RougeLsum(pair.candidate, pair.reference).f1;
  if (metric == "meteor") return Meteor(cand, ref);
  if (cand.empty() || ref.empty()) return 0.0;
  try {
    if (metric == "bertscore") {
      return BertScore(cand, ref, *options.embeddings, options.use_idf).f1;
    }
    return MoverScore(cand, ref, *options.embeddings);
  } catch (const std::out_of_range& e) {
    throw DataError(std::string("embedding lookup failed: ") + e.what());
  }
}

std::vector<double> ScorePair(const TextPair& pair, const EvalOptions& options) {
  const TokenSeq cand = Tokenize(pair.candidate);
  const TokenSeq ref = Tokenize(pair.reference);
  std::vector<double> row;
  row.reserve(options.metrics.size());
  for (const auto& m : options.metrics) row.push_back(ScoreOne(m, cand, ref, pair, options));
  return row;
}

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%5.2f", v);
  return buf;
}

std::string PadRight(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

EvalReport ReportFromJsonValue(const json& j, const std::string& origin) {
  if (!j.is_object()) throw DataError(origin + ": report must be a JSON object");
  EvalReport r;
  try {
    r.system = j.at("system").get<std::string>();
    r.dataset = j.value("dataset", std::string());
    r.examples = j.value("examples", 0);
    const json& scores = j.at("scores");
    if (!scores.is_object()) throw DataError(origin + ": \"scores\" must be an object");
    for (const auto& key : MetricKeys()) {
      if (scores.contains(key)) r.scores.emplace_back(key, scores.at(key).get<double>());
    }
    for (auto it = scores.begin(); it != scores.end(); ++it) {
      if (MetricIndex(it.key()) < 0) {
        throw DataError(origin + ": unknown metric '" + it.key() + "'");
      }
    }
  } catch (const json::exception& e) {
    throw DataError(origin + ": " + e.what());
  }
  try {
    r.Validate();
  } catch (const DataError& e) {
    throw DataError(origin + ": " + e.what());
  }
  return r;
}

}  // namespace

const std::vector<std::string>& MetricKeys() {
  static const std::vector<std::string> keys = {
      "rouge1", "rouge2", "rougeL", "rougeLsum", "meteor", "bertscore", "moverscore"};
  return keys;
}

const std::vector<std::string>& MetricLabels() {
  static const std::vector<std::string> labels = {
      "R-1", "R-2", "R-L", "RLsum", "MTR", "BERT", "Mover"};
  return labels;
}

bool IsEmbeddingMetric(const std::string& key) {
  return key == "bertscore" || key == "moverscore";
}

void ValidateEvalOptions(const EvalOptions& options) {
  std::set<std::string> seen;
  for (const auto& m : options.metrics) {
    if (MetricIndex(m) < 0) throw ConfigError("unknown metric '" + m + "'");
    if (!seen.insert(m).second) throw ConfigError("metric '" + m + "' requested twice");
    if (IsEmbeddingMetric(m) && options.embeddings == nullptr) {
      throw ConfigError("metric '" + m + "' needs an embedding table");
    }
  }
}

std::vector<std::vector<double>> ScoreExamplesSerial(const std::vector<TextPair>& pairs,
                                                     const EvalOptions& options) {
  ValidateEvalOptions(options);
  std::vector<std::vector<double>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(ScorePair(p, options));
  return out;
}

std::vector<std::vector<double>> ScoreExamplesParallel(
    const std::vector<TextPair>& pairs, const EvalOptions& options) {
  ValidateEvalOptions(options);
  std::vector<std::vector<double>> out(pairs.size());
  const long n = static_cast<long>(pairs.size());
  std::string error;
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = ScorePair(pairs[i], options);
    } catch (const std::exception& e) {
#pragma omp critical(season_eval_error)
      {
        if (!failed) {
          failed = true;
          error = e.what();
        }
      }
    }
  }
  if (failed) throw DataError(error);
  return out;
}

void EvalReport::Validate() const {
  std::set<std::string> seen;
  for (const auto& [key, value] : scores) {
    if (MetricIndex(key) < 0) throw DataError("unknown metric '" + key + "'");
    if (!seen.insert(key).second) throw DataError("duplicate metric '" + key + "'");
    if (!(value >= 0.0 && value <= 100.0)) {
      throw DataError("score " + key + " of '" + system + "' is outside [0, 100]");
    }
  }
  if (examples < 0) throw DataError("negative example count");
}

bool EvalReport::Has(const std::string& key) const {
  return std::any_of(scores.begin(), scores.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

double EvalReport::Get(const std::string& key) const {
  for (const auto& [k, v] : scores) {
    if (k == key) return v;
  }
  throw std::out_of_range("metric '" + key + "' not in report");
}

EvalReport Aggregate(const std::string& system, const std::string& dataset,
                     const std::vector<std::string>& metrics,
                     const std::vector<std::vector<double>>& per_example) {
  EvalReport r;
  r.system = system;
  r.dataset = dataset;
  r.examples = static_cast<int>(per_example.size());
  for (const auto& key : MetricKeys()) {
    auto it = std::find(metrics.begin(), metrics.end(), key);
    if (it == metrics.end()) continue;
    const std::size_t col = it - metrics.begin();
    double sum = 0.0;
    for (const auto& row : per_example) sum += row.at(col);
    const double mean = per_example.empty() ? 0.0 : sum / per_example.size();
    r.scores.emplace_back(key, 100.0 * mean);
  }
  return r;
}

std::string ReportToJson(const EvalReport& report) {
  json scores = json::object();
  for (const auto& [k, v] : report.scores) scores[k] = v;
  json j = {{"system", report.system},
            {"dataset", report.dataset},
            {"examples", report.examples},
            {"scores", scores}};
  return j.dump(2) + "\n";
}

EvalReport ReportFromJson(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(origin + ": malformed JSON (" + e.what() + ")");
  }
  return ReportFromJsonValue(j, origin);
}

std::vector<EvalReport> LoadReports(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw DataError(path + ": malformed JSON (" + e.what() + ")");
  }
  std::vector<EvalReport> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(ReportFromJsonValue(j[i], path + "[" + std::to_string(i) + "]"));
    }
  } else {
    out.push_back(ReportFromJsonValue(j, path));
  }
  if (out.empty()) throw DataError(path + ": no reports");
  return out;
}

std::string RenderTable(const std::vector<EvalReport>& reports) {
  std::vector<std::string> datasets;
  std::map<std::string, std::vector<const EvalReport*>> blocks;
  for (const auto& r : reports) {
    r.Validate();
    if (!blocks.count(r.dataset)) datasets.push_back(r.dataset);
    blocks[r.dataset].push_back(&r);
  }
  std::size_t ds_width = 7;
  std::size_t sys_width = 6;
  for (const auto& r : reports) {
    ds_width = std::max(ds_width, r.dataset.size());
    sys_width = std::max(sys_width, r.system.size());
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& ds : datasets) {
    const auto& rows = blocks[ds];
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front()->scores) keys.push_back(k);
    for (const auto* r : rows) {
      std::vector<std::string> mine;
      for (const auto& [k, v] : r->scores) mine.push_back(k);
      if (mine != keys) {
        throw DataError("report '" + r->system + "' has different metrics from '" +
                        rows.front()->system + "'");
      }
    }
    // Best per column at printed precision.
    std::vector<long> best(keys.size(), -1);
    for (const auto* r : rows) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        best[c] = std::max(best[c], std::lround(r->scores[c].second * 100.0));
      }
    }
    if (!first) out << '\n';
    first = false;
    out << PadRight("Dataset", ds_width) << "  " << PadRight("System", sys_width) << " ";
    for (std::size_t c = 0; c < keys.size(); ++c) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%5s", MetricLabels()[MetricIndex(keys[c])].c_str());
      out << (c ? " " : "") << buf;
    }
    out << "  best\n";
    for (const auto* r : rows) {
      out << PadRight(r->dataset, ds_width) << "  " << PadRight(r->system, sys_width) << " ";
      std::string marks;
      for (std::size_t c = 0; c < keys.size(); ++c) {
        out << (c ? " " : "") << Fixed2(r->scores[c].second);
        marks += std::lround(r->scores[c].second * 100.0) == best[c] ? '*' : '.';
      }
      out << "  " << marks << '\n';
    }
  }
  return out.str();
}

}  // namespace season
