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

#include "season/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace season::oracles {
namespace {

using Tokens = std::vector<std::string>;

void Budget(bool ok, const std::string& what) {
  if (!ok) throw std::length_error("oracle budget exceeded: " + what);
}

bool IsSubsequence(const Tokens& sub, const Tokens& seq) {
  std::size_t k = 0;
  for (const auto& t : seq) {
    if (k < sub.size() && sub[k] == t) ++k;
  }
  return k == sub.size();
}

double F1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

}  // namespace

int LcsBruteforce(const Tokens& a, const Tokens& b, const OracleBudget& budget) {
  Budget(static_cast<int>(a.size()) <= budget.max_len &&
             static_cast<int>(b.size()) <= budget.max_len,
         "LCS length");
  int best = 0;
  const unsigned subsets = 1u << a.size();
  for (unsigned mask = 0; mask < subsets; ++mask) {
    Tokens sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (static_cast<int>(sub.size()) > best && IsSubsequence(sub, b)) {
      best = static_cast<int>(sub.size());
    }
  }
  return best;
}

double RougeNF1Bruteforce(const Tokens& cand, const Tokens& ref, int n) {
  auto grams = [n](const Tokens& s) {
    std::vector<Tokens> out;
    for (int i = 0; i + n <= static_cast<int>(s.size()); ++i) {
      out.emplace_back(s.begin() + i, s.begin() + i + n);
    }
    return out;
  };
  const auto cg = grams(cand);
  const auto rg = grams(ref);
  std::vector<bool> used(rg.size(), false);
  int overlap = 0;
  for (const auto& g : cg) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!used[j] && rg[j] == g) {
        used[j] = true;
        ++overlap;
        break;
      }
    }
  }
  const double p = cg.empty() ? 0.0 : static_cast<double>(overlap) / cg.size();
  const double r = rg.empty() ? 0.0 : static_cast<double>(overlap) / rg.size();
  return F1(p, r);
}

double RougeLF1Bruteforce(const Tokens& cand, const Tokens& ref) {
  if (cand.empty() || ref.empty()) return 0.0;
  const double l = LcsBruteforce(cand, ref, {16, 16, 0});
  return F1(l / cand.size(), l / ref.size());
}

AlignmentCounts MeteorAlignmentBruteforce(const Tokens& cand, const Tokens& ref,
                                          const OracleBudget& budget) {
  Budget(static_cast<int>(cand.size()) <= budget.max_len &&
             static_cast<int>(ref.size()) <= budget.max_len,
         "METEOR length");
  AlignmentCounts best{0, 0};
  bool have = false;
  long visited = 0;
  std::vector<int> align(cand.size(), -1);
  std::vector<bool> used(ref.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    Budget(++visited <= budget.max_plans, "METEOR alignments");
    if (i == cand.size()) {
      int m = 0;
      int chunks = 0;
      int prev_i = -2;
      int prev_j = -2;
      for (std::size_t k = 0; k < cand.size(); ++k) {
        if (align[k] < 0) continue;
        ++m;
        if (!(static_cast<int>(k) == prev_i + 1 && align[k] == prev_j + 1)) ++chunks;
        prev_i = static_cast<int>(k);
        prev_j = align[k];
      }
      if (!have || m > best.matches || (m == best.matches && chunks < best.chunks)) {
        best = {m, chunks};
        have = true;
      }
      return;
    }
    rec(i + 1);
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (!used[j] && ref[j] == cand[i]) {
        used[j] = true;
        align[i] = static_cast<int>(j);
        rec(i + 1);
        align[i] = -1;
        used[j] = false;
      }
    }
  };
  rec(0);
  return best;
}

double MeteorScoreFromAlignment(const AlignmentCounts& counts,
                                std::size_t cand_len, std::size_t ref_len) {
  if (counts.matches == 0) return 0.0;
  const double p = static_cast<double>(counts.matches) / cand_len;
  const double r = static_cast<double>(counts.matches) / ref_len;
  const double fmean = 10 * p * r / (r + 9 * p);
  const double frag = static_cast<double>(counts.chunks) / counts.matches;
  return fmean * (1 - 0.5 * frag * frag * frag);
}

double WmdBruteforce(const std::vector<double>& p, const std::vector<double>& q,
                     const std::vector<double>& costs) {
  const std::size_t rows = p.size();
  const std::size_t cols = q.size();
  Budget(rows >= 1 && cols >= 1 && rows <= 3 && cols <= 3, "WMD support size");
  Budget(costs.size() == rows * cols, "WMD cost shape");
  auto quarters = [](double v) {
    const double scaled = v * 4.0;
    const long k = std::lround(scaled);
    Budget(std::abs(scaled - static_cast<double>(k)) < 1e-12 && k >= 0,
           "WMD masses must lie on the 0.25 grid");
    return static_cast<int>(k);
  };
  std::vector<int> row_left, col_left;
  int total_p = 0, total_q = 0;
  for (double v : p) total_p += (row_left.push_back(quarters(v)), row_left.back());
  for (double v : q) total_q += (col_left.push_back(quarters(v)), col_left.back());
  Budget(total_p == 4 && total_q == 4, "WMD masses must sum to 1");

  std::vector<int> cell(rows * cols, 0);
  std::vector<double> best_plan;
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == rows * cols) {
      for (std::size_t i = 0; i < rows; ++i) {
        if (row_left[i] != 0) return;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_left[j] != 0) return;
      }
      double cost = 0.0;
      for (std::size_t k = 0; k < cell.size(); ++k) cost += 0.25 * cell[k] * costs[k];
      if (cost < best) {
        best = cost;
        best_plan.assign(cell.size(), 0.0);
        for (std::size_t k = 0; k < cell.size(); ++k) best_plan[k] = 0.25 * cell[k];
      }
      return;
    }
    const std::size_t i = c / cols;
    const std::size_t j = c % cols;
    const int hi = std::min(row_left[i], col_left[j]);
    for (int v = 0; v <= hi; ++v) {
      cell[c] = v;
      row_left[i] -= v;
      col_left[j] -= v;
      rec(c + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
    cell[c] = 0;
  };
  rec(0);

  // Continuous refinement: push the largest feasible amount around any
  // improving 2x2 cycle until none is left.
  std::vector<double>& plan = best_plan;
  for (int iter = 0; iter < 1000; ++iter) {
    bool improved = false;
    for (std::size_t i1 = 0; i1 < rows; ++i1) {
      for (std::size_t i2 = 0; i2 < rows; ++i2) {
        for (std::size_t j1 = 0; j1 < cols; ++j1) {
          for (std::size_t j2 = 0; j2 < cols; ++j2) {
            if (i1 == i2 || j1 == j2) continue;
            // +d at (i1,j1),(i2,j2); -d at (i1,j2),(i2,j1)
            const double delta_cost = costs[i1 * cols + j1] + costs[i2 * cols + j2] -
                                      costs[i1 * cols + j2] - costs[i2 * cols + j1];
            const double room = std::min(plan[i1 * cols + j2], plan[i2 * cols + j1]);
            if (delta_cost < -1e-15 && room > 1e-15) {
              plan[i1 * cols + j1] += room;
              plan[i2 * cols + j2] += room;
              plan[i1 * cols + j2] -= room;
              plan[i2 * cols + j1] -= room;
              improved = true;
            }
          }
        }
      }
    }
    if (!improved) break;
  }
  double cost = 0.0;
  for (std::size_t k = 0; k < plan.size(); ++k) cost += plan[k] * costs[k];
  return std::min(best, cost);
}

namespace {

bool RepeatsNGram(const std::vector<int>& seq, int n) {
  if (n <= 0) return false;
  const int len = static_cast<int>(seq.size());
  for (int a = 0; a + n <= len; ++a) {
    for (int b = a + 1; b + n <= len; ++b) {
      if (std::equal(seq.begin() + a, seq.begin() + a + n, seq.begin() + b)) {
        return true;
      }
    }
  }
  return false;
}

double OracleScore(const Hypothesis& h, double alpha) {
  const double lp = std::pow((5.0 + static_cast<double>(h.tokens.size())) / 6.0, alpha);
  return h.logprob / lp;
}

}  // namespace

Hypothesis BestSequenceBruteforce(const StepModel& model, const DecodeConfig& cfg,
                                  const OracleBudget& budget) {
  Budget(model.vocab_size() <= budget.max_alphabet, "vocabulary size");
  Budget(cfg.max_len <= budget.max_len, "max_len");
  const int eos = model.eos_id();
  std::vector<Hypothesis> finished;
  std::vector<Hypothesis> unfinished;
  long visited = 0;
  std::function<void(Hypothesis&)> rec = [&](Hypothesis& h) {
    Budget(++visited <= budget.max_plans, "sequence count");
    const std::vector<double> lp = model.NextLogProbs(h.tokens);
    for (int v = 0; v < model.vocab_size(); ++v) {
      if (std::isinf(lp[v]) && lp[v] < 0) continue;
      h.tokens.push_back(v);
      if (!RepeatsNGram(h.tokens, cfg.block_n)) {
        const double saved = h.logprob;
        h.logprob += lp[v];
        if (v == eos) {
          finished.push_back({h.tokens, h.logprob, true});
        } else if (static_cast<int>(h.tokens.size()) == cfg.max_len) {
          unfinished.push_back({h.tokens, h.logprob, false});
        } else {
          rec(h);
        }
        h.logprob = saved;
      }
      h.tokens.pop_back();
    }
  };
  Hypothesis root;
  rec(root);
  std::vector<Hypothesis> pool = finished;
  pool.insert(pool.end(), unfinished.begin(), unfinished.end());
  if (pool.empty()) return Hypothesis{};
  const Hypothesis* best = &pool[0];
  for (const auto& h : pool) {
    const double s = OracleScore(h, cfg.alpha);
    const double sb = OracleScore(*best, cfg.alpha);
    if (s > sb || (s == sb && h.tokens < best->tokens)) best = &h;
  }
  return *best;
}

std::vector<double> RandomStepModel::NextLogProbs(std::span<const int> prefix) const {
  std::uint64_t h = 1469598103934665603ull ^ seed_;
  for (int t : prefix) {
    h ^= static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  std::mt19937_64 rng(h);
  std::normal_distribution<double> normal(0.0, scale_);
  std::vector<double> logits(vocab_);
  for (auto& x : logits) x = normal(rng);
  const double mx = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (double x : logits) z += std::exp(x - mx);
  const double log_z = mx + std::log(z);
  for (auto& x : logits) x -= log_z;
  return logits;
}

}  // namespace season::oracles
