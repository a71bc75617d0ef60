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

#include "season/metrics.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace season {

void EmbeddingTable::Add(const std::string& token, std::vector<double> vec) {
  if (dim_ == 0 && vectors_.empty()) dim_ = static_cast<int>(vec.size());
  if (static_cast<int>(vec.size()) != dim_ || dim_ < 1) {
    throw std::invalid_argument("embedding for '" + token + "' has dimension " +
                                std::to_string(vec.size()) + ", expected " +
                                std::to_string(dim_));
  }
  vectors_[token] = std::move(vec);
}

void EmbeddingTable::SetIdf(const std::string& token, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("idf weight for '" + token + "' must be >= 0");
  }
  idf_[token] = weight;
}

bool EmbeddingTable::Contains(const std::string& token) const {
  return vectors_.count(token) > 0;
}

const std::vector<double>& EmbeddingTable::Lookup(
    const std::string& token) const {
  auto it = vectors_.find(token);
  if (it != vectors_.end()) return it->second;
  it = vectors_.find(kUnknownToken);
  if (it != vectors_.end()) return it->second;
  throw std::out_of_range("no embedding for token '" + token + "'");
}

double EmbeddingTable::Idf(const std::string& token) const {
  auto it = idf_.find(token);
  return it == idf_.end() ? 1.0 : it->second;
}

std::vector<std::string> EmbeddingTable::SortedTokens() const {
  std::vector<std::string> out;
  out.reserve(vectors_.size());
  for (const auto& [tok, vec] : vectors_) out.push_back(tok);
  std::sort(out.begin(), out.end());
  return out;
}

MetricScore RougeN(const TokenSeq& cand, const TokenSeq& ref, int n) {
  const NGramCounts c = NGrams(cand, n);
  const NGramCounts r = NGrams(ref, n);
  int overlap = 0;
  for (const auto& [gram, count] : c) {
    auto it = r.find(gram);
    if (it != r.end()) overlap += std::min(count, it->second);
  }
  const auto total = [n](const TokenSeq& s) {
    return std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(s.size()) - n + 1);
  };
  const auto cand_total = total(cand);
  const auto ref_total = total(ref);
  const double p = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
  const double rc = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  return MetricScore::FromPR(p, rc);
}

MetricScore RougeL(const TokenSeq& cand, const TokenSeq& ref) {
  if (cand.empty() || ref.empty()) return {};
  const double lcs = static_cast<double>(LcsLength(cand, ref));
  return MetricScore::FromPR(lcs / cand.size(), lcs / ref.size());
}

MetricScore RougeLsum(const std::string& cand, const std::string& ref) {
  std::vector<TokenSeq> cand_sents;
  std::vector<TokenSeq> ref_sents;
  std::map<std::string, int> cand_counts;
  std::map<std::string, int> ref_counts;
  std::size_t cand_len = 0;
  std::size_t ref_len = 0;
  for (const auto& s : SplitDocument(cand)) {
    TokenSeq t = Tokenize(s);
    if (t.empty()) continue;
    for (const auto& tok : t) ++cand_counts[tok];
    cand_len += t.size();
    cand_sents.push_back(std::move(t));
  }
  for (const auto& s : SplitDocument(ref)) {
    TokenSeq t = Tokenize(s);
    if (t.empty()) continue;
    for (const auto& tok : t) ++ref_counts[tok];
    ref_len += t.size();
    ref_sents.push_back(std::move(t));
  }
  if (cand_len == 0 || ref_len == 0) return {};
  std::size_t hits = 0;
  for (const auto& r : ref_sents) {
    for (std::size_t pos : UnionLcsPositions(r, cand_sents)) {
      const std::string& tok = r[pos];
      int& cc = cand_counts[tok];
      int& rc = ref_counts[tok];
      if (cc > 0 && rc > 0) {
        ++hits;
        --cc;
        --rc;
      }
    }
  }
  return MetricScore::FromPR(static_cast<double>(hits) / cand_len,
                             static_cast<double>(hits) / ref_len);
}

MeteorResult MeteorFromCounts(int matches, int chunks, std::size_t cand_len,
                              std::size_t ref_len) {
  MeteorResult out;
  out.matches = matches;
  out.chunks = chunks;
  if (matches == 0 || cand_len == 0 || ref_len == 0) return out;
  out.precision = static_cast<double>(matches) / cand_len;
  out.recall = static_cast<double>(matches) / ref_len;
  out.fmean = 10.0 * out.precision * out.recall /
              (out.recall + 9.0 * out.precision);
  const double frag = static_cast<double>(chunks) / matches;
  out.penalty = 0.5 * frag * frag * frag;
  out.score = out.fmean * (1.0 - out.penalty);
  return out;
}

namespace {

constexpr std::size_t kMeteorExhaustiveLimit = 50;
constexpr std::size_t kMeteorStateBudget = 1u << 21;

// Chooses, for every token type, which occurrences to align so that the
// number of adjacent aligned pairs ("links") is maximal. chunks = m - links.
class ChunkMinimizer {
 public:
  ChunkMinimizer(const TokenSeq& cand, const TokenSeq& ref)
      : cand_(cand), ref_(ref) {
    std::unordered_map<std::string, int> type_of;
    auto type_id = [&](const std::string& tok) {
      auto [it, inserted] = type_of.emplace(tok, static_cast<int>(type_of.size()));
      return it->second;
    };
    cand_type_.resize(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) cand_type_[i] = type_id(cand[i]);
    ref_type_.resize(ref.size());
    for (std::size_t j = 0; j < ref.size(); ++j) ref_type_[j] = type_id(ref[j]);
    const std::size_t types = type_of.size();
    need_.assign(types, 0);
    ref_mask_.assign(types, 0);
    std::vector<int> cand_count(types, 0), ref_count(types, 0);
    for (int t : cand_type_) ++cand_count[t];
    for (std::size_t j = 0; j < ref.size(); ++j) {
      ++ref_count[ref_type_[j]];
      if (j < 64) ref_mask_[ref_type_[j]] |= std::uint64_t{1} << j;
    }
    for (std::size_t t = 0; t < types; ++t) {
      need_[t] = std::min(cand_count[t], ref_count[t]);
      matches_ += need_[t];
    }
    // Occurrences of each cand type at positions > i.
    remaining_after_.assign(cand.size(), 0);
    std::vector<int> seen(types, 0);
    for (std::size_t i = cand.size(); i-- > 0;) {
      remaining_after_[i] = seen[cand_type_[i]];
      ++seen[cand_type_[i]];
    }
  }

  int matches() const { return matches_; }

  // Returns false when the state budget is exhausted.
  bool SolveExact(int* chunks) {
    if (cand_.size() > kMeteorExhaustiveLimit ||
        ref_.size() > kMeteorExhaustiveLimit) {
      return false;
    }
    if (matches_ == 0) {
      *chunks = 0;
      return true;
    }
    budget_exceeded_ = false;
    const int links = Best(0, -1, 0);
    if (budget_exceeded_) return false;
    *chunks = matches_ - links;
    return true;
  }

  int SolveGreedy() const {
    std::vector<bool> used(ref_.size(), false);
    std::vector<int> aligned(need_.size(), 0);
    int prev_j = -2;
    int prev_i = -2;
    int chunks = 0;
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      const int t = cand_type_[i];
      if (aligned[t] >= need_[t]) continue;
      int pick = -1;
      const int next = prev_j + 1;
      if (prev_i == static_cast<int>(i) - 1 && next >= 0 &&
          next < static_cast<int>(ref_.size()) && !used[next] &&
          ref_type_[next] == t) {
        pick = next;
      } else {
        for (std::size_t j = 0; j < ref_.size(); ++j) {
          if (!used[j] && ref_type_[j] == t) {
            pick = static_cast<int>(j);
            break;
          }
        }
      }
      used[pick] = true;
      ++aligned[t];
      if (!(prev_i == static_cast<int>(i) - 1 && pick == prev_j + 1)) ++chunks;
      prev_i = static_cast<int>(i);
      prev_j = pick;
    }
    return chunks;
  }

 private:
  // prev_j: ref position aligned to cand i-1, or -1 if i-1 was unaligned.
  int Best(std::size_t i, int prev_j, std::uint64_t used) {
    if (i == cand_.size()) return 0;
    const std::uint64_t key_hi = (static_cast<std::uint64_t>(i) << 8) |
                                 static_cast<std::uint64_t>(prev_j + 1);
    auto it = memo_.find({key_hi, used});
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= kMeteorStateBudget) {
      budget_exceeded_ = true;
      return 0;
    }
    const int t = cand_type_[i];
    const int aligned = std::popcount(used & ref_mask_[t]);
    const int missing = need_[t] - aligned;
    int best = -1;
    if (missing <= remaining_after_[i]) best = Best(i + 1, -1, used);
    if (missing > 0) {
      std::uint64_t free = ref_mask_[t] & ~used;
      while (free) {
        const int j = std::countr_zero(free);
        free &= free - 1;
        const int link = (prev_j >= 0 && j == prev_j + 1) ? 1 : 0;
        best = std::max(best, link + Best(i + 1, j, used | (std::uint64_t{1} << j)));
      }
    }
    memo_.emplace(std::make_pair(key_hi, used), best);
    return best;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
  };

  const TokenSeq& cand_;
  const TokenSeq& ref_;
  std::vector<int> cand_type_;
  std::vector<int> ref_type_;
  std::vector<int> need_;
  std::vector<std::uint64_t> ref_mask_;
  std::vector<int> remaining_after_;
  int matches_ = 0;
  bool budget_exceeded_ = false;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, PairHash> memo_;
};

}  // namespace

MeteorResult MeteorDetailed(const TokenSeq& cand, const TokenSeq& ref) {
  ChunkMinimizer solver(cand, ref);
  int chunks = 0;
  bool exhaustive = solver.SolveExact(&chunks);
  if (!exhaustive) chunks = solver.SolveGreedy();
  MeteorResult out =
      MeteorFromCounts(solver.matches(), chunks, cand.size(), ref.size());
  out.exhaustive = exhaustive;
  return out;
}

double Meteor(const TokenSeq& cand, const TokenSeq& ref) {
  return MeteorDetailed(cand, ref).score;
}

double CosineSimilarity(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

namespace {

// Weighted mean over `from` of the best clamped cosine against `to`.
double GreedyMatch(const TokenSeq& from, const TokenSeq& to,
                   const EmbeddingTable& emb, bool use_idf) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& t : from) {
    const auto& vt = emb.Lookup(t);
    double best = 0.0;
    for (const auto& c : to) {
      best = std::max(best, CosineSimilarity(vt, emb.Lookup(c)));
    }
    const double w = use_idf ? emb.Idf(t) : 1.0;
    num += w * std::min(1.0, best);
    den += w;
  }
  return den > 0 ? num / den : 0.0;
}

void CheckInputs(const TokenSeq& cand, const TokenSeq& ref,
                 const EmbeddingTable& emb, const char* what) {
  if (cand.empty() || ref.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty sequence");
  }
  if (emb.dim() < 1) {
    throw std::invalid_argument(std::string(what) + ": empty embedding table");
  }
}

// Unique token types in first-seen order with normalized mass.
void Distribution(const TokenSeq& seq, const EmbeddingTable& emb,
                  std::vector<std::string>* types, std::vector<double>* mass) {
  std::unordered_map<std::string, std::size_t> index;
  types->clear();
  mass->clear();
  for (const auto& t : seq) {
    auto [it, inserted] = index.emplace(t, types->size());
    if (inserted) {
      types->push_back(t);
      mass->push_back(0.0);
    }
    (*mass)[it->second] += emb.Idf(t);
  }
  double total = std::accumulate(mass->begin(), mass->end(), 0.0);
  if (total <= 0.0) {
    std::fill(mass->begin(), mass->end(), 0.0);
    for (const auto& t : seq) (*mass)[index[t]] += 1.0;
    total = static_cast<double>(seq.size());
  }
  for (double& m : *mass) m /= total;
}

}  // namespace

MetricScore BertScore(const TokenSeq& cand, const TokenSeq& ref,
                      const EmbeddingTable& emb, bool use_idf) {
  CheckInputs(cand, ref, emb, "BertScore");
  const double recall = GreedyMatch(ref, cand, emb, use_idf);
  const double precision = GreedyMatch(cand, ref, emb, use_idf);
  return MetricScore::FromPR(precision, recall);
}

double WordMoversDistance(const TokenSeq& cand, const TokenSeq& ref,
                          const EmbeddingTable& emb, MoverDetail* detail) {
  CheckInputs(cand, ref, emb, "MoverScore");
  MoverDetail local;
  MoverDetail& d = detail ? *detail : local;
  Distribution(cand, emb, &d.cand_types, &d.problem.supply);
  Distribution(ref, emb, &d.ref_types, &d.problem.demand);
  const std::size_t rows = d.cand_types.size();
  const std::size_t cols = d.ref_types.size();
  d.problem.cost.assign(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& a = emb.Lookup(d.cand_types[i]);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& b = emb.Lookup(d.ref_types[j]);
      double sq = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) sq += (a[k] - b[k]) * (a[k] - b[k]);
      d.problem.cost[i * cols + j] = std::sqrt(sq);
    }
  }
  // Renormalize so both totals agree bit-for-bit before solving.
  const double ts = std::accumulate(d.problem.supply.begin(), d.problem.supply.end(), 0.0);
  const double td = std::accumulate(d.problem.demand.begin(), d.problem.demand.end(), 0.0);
  for (double& v : d.problem.demand) v *= ts / td;
  d.plan = SolveTransport(d.problem);
  return std::max(0.0, d.plan.cost);
}

double MoverScore(const TokenSeq& cand, const TokenSeq& ref,
                  const EmbeddingTable& emb) {
  return 1.0 / (1.0 + WordMoversDistance(cand, ref, emb));
}

std::set<NGram> NovelNGrams(const TokenSeq& summary, const TokenSeq& source,
                            int n) {
  const NGramCounts src = NGrams(source, n);
  std::set<NGram> out;
  for (const auto& [gram, count] : NGrams(summary, n)) {
    if (!src.count(gram)) out.insert(gram);
  }
  return out;
}

}  // namespace season
