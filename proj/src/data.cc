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

#include "season/data.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "season/errors.h"

namespace season {
namespace {

using nlohmann::json;

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::string Where(const std::string& path, int line) {
  return path + ":" + std::to_string(line) + ": ";
}

std::string RequireString(const json& obj, const char* key,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(where + "missing field \"" + key + "\"");
  if (!it->is_string()) {
    throw DataError(where + "field \"" + key + "\" must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

double ParseReal(const std::string& field, const std::string& where) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DataError(where + "non-numeric field '" + field + "'");
  }
  return value;
}

}  // namespace

DatasetProfile ProfileByName(const std::string& name) {
  if (name == "cnndm") return {"cnndm", 512, 100};
  if (name == "samsum") return {"samsum", 256, 50};
  if (name == "edt") return {"edt", 512, 40};
  if (name == "custom") return {"custom", 512, 100};
  throw ConfigError("unknown profile '" + name +
                    "' (expected cnndm|samsum|edt|custom)");
}

void ValidateProfile(const DatasetProfile& profile) {
  if (profile.max_src_tokens < 8 || profile.max_tgt_tokens < 8) {
    throw ConfigError("profile limits must be >= 8");
  }
}

const std::vector<std::string>& Vocab::ReservedTokens() {
  static const std::vector<std::string> kTokens = {"<pad>", "<unk>", "<s>",
                                                   "</s>", "<sent>"};
  return kTokens;
}

Vocab::Vocab() : Vocab(ReservedTokens()) {}

Vocab::Vocab(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  const auto& reserved = ReservedTokens();
  if (tokens_.size() < reserved.size() ||
      !std::equal(reserved.begin(), reserved.end(), tokens_.begin())) {
    throw DataError("vocabulary must start with the reserved tokens");
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!index_.emplace(tokens_[i], static_cast<int>(i)).second) {
      throw DataError("duplicate vocabulary token '" + tokens_[i] + "'");
    }
  }
}

int Vocab::Id(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnkId : it->second;
}

const std::string& Vocab::Token(int id) const {
  return tokens_.at(static_cast<std::size_t>(id));
}

std::vector<Example> LoadCorpus(const std::string& path, bool require_summary) {
  std::ifstream in = OpenOrThrow(path);
  std::vector<Example> corpus;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = Where(path, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + "malformed JSON (" + e.what() + ")");
    }
    if (!obj.is_object()) throw DataError(where + "record must be an object");
    Example ex{RequireString(obj, "id", where), RequireString(obj, "document", where),
               ""};
    if (require_summary || obj.contains("summary")) {
      ex.summary = RequireString(obj, "summary", where);
    }
    if (ex.id.empty()) throw DataError(where + "empty id");
    if (ex.document.empty()) throw DataError(where + "empty document");
    if (!seen.insert(ex.id).second) {
      throw DataError(where + "duplicate id '" + ex.id + "'");
    }
    corpus.push_back(std::move(ex));
  }
  return corpus;
}

void WriteCorpus(const std::string& path, const std::vector<Example>& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  for (const auto& ex : corpus) {
    out << json{{"id", ex.id}, {"document", ex.document}, {"summary", ex.summary}}
               .dump()
        << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> LoadSummaries(
    const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = Where(path, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + "malformed JSON (" + e.what() + ")");
    }
    if (!obj.is_object()) throw DataError(where + "record must be an object");
    std::string id = RequireString(obj, "id", where);
    if (!seen.insert(id).second) throw DataError(where + "duplicate id '" + id + "'");
    out.emplace_back(std::move(id), RequireString(obj, "summary", where));
  }
  return out;
}

Vocab BuildVocab(const std::vector<Example>& corpus, int cap) {
  if (cap <= kReservedTokens) {
    throw ConfigError("vocabulary cap must exceed the 5 reserved tokens");
  }
  std::map<std::string, long> counts;
  for (const auto& ex : corpus) {
    for (const auto& t : Tokenize(ex.document)) ++counts[t];
    for (const auto& t : Tokenize(ex.summary)) ++counts[t];
  }
  for (const auto& r : Vocab::ReservedTokens()) counts.erase(r);
  std::vector<std::pair<std::string, long>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;  // map order already breaks ties
  });
  std::vector<std::string> tokens = Vocab::ReservedTokens();
  for (const auto& [tok, count] : ranked) {
    if (static_cast<int>(tokens.size()) >= cap) break;
    tokens.push_back(tok);
  }
  return Vocab(std::move(tokens));
}

std::vector<int> Encode(const Vocab& vocab, const TokenSeq& tokens,
                        int* unk_count) {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    const int id = vocab.Id(t);
    if (id == kUnkId && unk_count) ++*unk_count;
    ids.push_back(id);
  }
  return ids;
}

std::vector<TokenSeq> DocumentSentences(const std::string& document) {
  std::vector<TokenSeq> out;
  for (const auto& s : SplitDocument(document)) {
    TokenSeq t = Tokenize(s);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

SalienceAllocation OracleSalience(const Example& example,
                                  const std::vector<double>& thresholds) {
  const std::vector<TokenSeq> sentences = DocumentSentences(example.document);
  if (sentences.empty()) {
    throw DataError("example '" + example.id + "' has no sentences");
  }
  return AllocateSalience(sentences, Tokenize(example.summary), thresholds);
}

PreprocessedExample Preprocess(const Example& example,
                               const DatasetProfile& profile,
                               const Vocab& vocab,
                               const std::vector<double>& thresholds) {
  ValidateProfile(profile);
  const std::vector<TokenSeq> sentences = DocumentSentences(example.document);
  if (sentences.empty()) {
    throw DataError("example '" + example.id + "' has no sentences");
  }
  const SalienceAllocation oracle =
      AllocateSalience(sentences, Tokenize(example.summary), thresholds);

  PreprocessedExample out;
  out.id = example.id;
  const auto limit = static_cast<std::size_t>(profile.max_src_tokens);
  int sentence = 0;
  bool truncated = false;
  for (const auto& s : sentences) {
    if (out.input_ids.size() + 2 > limit) {
      truncated = true;
      break;
    }
    out.input_ids.push_back(kMarkerId);
    out.sentence_of_token.push_back(sentence);
    for (const auto& tok : s) {
      if (out.input_ids.size() == limit) {
        truncated = true;
        break;
      }
      const int id = vocab.Id(tok);
      out.unk_count += id == kUnkId;
      ++out.token_count;
      out.input_ids.push_back(id);
      out.sentence_of_token.push_back(sentence);
    }
    ++sentence;
    if (truncated) break;
  }
  if (sentence == 0) {
    throw DataError("example '" + example.id +
                    "': no sentence survives truncation");
  }
  if (out.input_ids.size() < limit) {
    out.input_ids.push_back(kEosId);
    out.sentence_of_token.push_back(sentence - 1);
  }
  out.levels.assign(oracle.levels.begin(), oracle.levels.begin() + sentence);
  out.scores.assign(oracle.scores.begin(), oracle.scores.begin() + sentence);

  const TokenSeq summary = Tokenize(example.summary);
  const std::size_t keep = std::min<std::size_t>(
      summary.size(), static_cast<std::size_t>(profile.max_tgt_tokens - 2));
  out.target_ids.push_back(kBosId);
  for (std::size_t i = 0; i < keep; ++i) {
    const int id = vocab.Id(summary[i]);
    out.unk_count += id == kUnkId;
    ++out.token_count;
    out.target_ids.push_back(id);
  }
  out.target_ids.push_back(kEosId);
  return out;
}

EmbeddingTable LoadEmbeddings(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  EmbeddingTable table;
  std::string line;
  int line_no = 0;
  int dim = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = Where(path, line_no);
    const auto fields = SplitFields(line);
    if (fields.size() < 2) throw DataError(where + "expected token and vector");
    const int d = static_cast<int>(fields.size()) - 1;
    if (dim < 0) {
      dim = d;
      table = EmbeddingTable(dim);
    } else if (d != dim) {
      throw DataError(where + "dimension " + std::to_string(d) + " != " +
                      std::to_string(dim));
    }
    std::vector<double> vec;
    vec.reserve(d);
    for (int k = 1; k <= d; ++k) vec.push_back(ParseReal(fields[k], where));
    table.Add(fields[0], std::move(vec));
  }
  return table;
}

void LoadIdf(const std::string& path, EmbeddingTable* table) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string where = Where(path, line_no);
    const auto fields = SplitFields(line);
    if (fields.size() != 2) throw DataError(where + "expected 'token weight'");
    const double w = ParseReal(fields[1], where);
    if (w < 0) throw DataError(where + "negative idf weight");
    table->SetIdf(fields[0], w);
  }
}

std::vector<Example> SyntheticCorpus(int count, std::uint64_t seed,
                                     const std::string& id_prefix) {
  static constexpr std::array<const char*, 10> kCompanies = {
      "Acme", "Globex", "Initech", "Umbrella", "Hooli",
      "Vandelay", "Stark", "Wayne", "Tyrell", "Cyberdyne"};
  static constexpr std::array<const char*, 5> kMoves = {"rose", "fell", "climbed",
                                                        "dropped", "jumped"};
  static constexpr std::array<const char*, 7> kAmounts = {"2", "3", "4", "5",
                                                          "6", "7", "8"};
  static constexpr std::array<const char*, 2> kUnits = {"percent", "points"};
  static constexpr std::array<const char*, 5> kDays = {
      "monday", "tuesday", "wednesday", "thursday", "friday"};
  static constexpr std::array<const char*, 5> kSubjects = {
      "Traders", "Analysts", "Officials", "Residents", "Reporters"};
  static constexpr std::array<const char*, 5> kActs = {
      "watched", "discussed", "ignored", "praised", "questioned"};
  static constexpr std::array<const char*, 5> kObjects = {
      "weather", "parade", "festival", "election", "traffic"};
  static constexpr std::array<const char*, 5> kManners = {
      "closely", "briefly", "calmly", "loudly", "again"};
  static constexpr std::array<const char*, 5> kTimes = {
      "all week", "this morning", "last night", "at noon", "by phone"};

  std::mt19937_64 rng(seed);
  auto pick = [&rng](const auto& pool) {
    return std::string(pool[rng() % pool.size()]);
  };
  std::vector<Example> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::string company = pick(kCompanies);
    const std::string lead_tail = " shares " + pick(kMoves) + " " +
                                  pick(kAmounts) + " " + pick(kUnits) + " on " +
                                  pick(kDays);
    std::string doc = company + lead_tail + ".";
    const int fillers = 2 + static_cast<int>(rng() % 3);
    for (int f = 0; f < fillers; ++f) {
      doc += " " + pick(kSubjects) + " " + pick(kActs) + " the " + pick(kObjects) +
             " " + pick(kManners) + " " + pick(kTimes) + ".";
    }
    std::string summary = company + lead_tail;
    summary[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(summary[0])));
    corpus.push_back({id_prefix + "-" + std::to_string(i), doc, summary});
  }
  return corpus;
}

}  // namespace season
