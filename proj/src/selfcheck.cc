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

#include "season/selfcheck.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "season/decode.h"
#include "season/metrics.h"
#include "season/oracles.h"
#include "season/transport.h"

namespace season {
namespace {

TokenSeq RandomTokens(std::mt19937_64& rng, int max_len, int alphabet) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  TokenSeq out(len(rng));
  for (auto& t : out) t = std::string(1, static_cast<char>('a' + sym(rng)));
  return out;
}

void Report(std::ostream& log, const char* name, int cases, int failures) {
  log << (failures == 0 ? "ok   " : "FAIL ") << name << ": " << cases - failures
      << "/" << cases << " agree\n";
}

}  // namespace

bool RunSelfCheck(std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  bool all = true;

  {
    int fails = 0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
      const TokenSeq a = RandomTokens(rng, 8, 4);
      const TokenSeq b = RandomTokens(rng, 8, 4);
      bool ok = std::abs(RougeN(a, b, 1).f1 - oracles::RougeNF1Bruteforce(a, b, 1)) <= 1e-9 &&
                std::abs(RougeN(a, b, 2).f1 - oracles::RougeNF1Bruteforce(a, b, 2)) <= 1e-9 &&
                std::abs(RougeL(a, b).f1 - oracles::RougeLF1Bruteforce(a, b)) <= 1e-9;
      fails += ok ? 0 : 1;
    }
    Report(log, "rouge", cases, fails);
    all = all && fails == 0;
  }
  {
    int fails = 0;
    const int cases = 50;
    for (int i = 0; i < cases; ++i) {
      const TokenSeq a = RandomTokens(rng, 7, 3);
      const TokenSeq b = RandomTokens(rng, 7, 3);
      const MeteorResult got = MeteorDetailed(a, b);
      const auto want = oracles::MeteorAlignmentBruteforce(a, b);
      const double want_score = oracles::MeteorScoreFromAlignment(want, a.size(), b.size());
      bool ok = got.matches == want.matches && got.chunks == want.chunks &&
                std::abs(got.score - want_score) <= 1e-12;
      fails += ok ? 0 : 1;
    }
    Report(log, "meteor", cases, fails);
    all = all && fails == 0;
  }
  {
    int fails = 0;
    const int cases = 30;
    std::uniform_int_distribution<int> side(1, 3);
    std::uniform_real_distribution<double> cost(0.0, 2.0);
    auto masses = [&](int k) {
      // Split 4 quarters across k points, each at least one quarter.
      std::vector<double> m(k, 0.25);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int q = k; q < 4; ++q) m[pick(rng)] += 0.25;
      return m;
    };
    for (int i = 0; i < cases; ++i) {
      TransportProblem prob;
      prob.supply = masses(side(rng));
      prob.demand = masses(side(rng));
      prob.cost.assign(prob.supply.size() * prob.demand.size(), 0.0);
      for (auto& c : prob.cost) c = cost(rng);
      const TransportPlan plan = SolveTransport(prob);
      const double want = oracles::WmdBruteforce(prob.supply, prob.demand, prob.cost);
      bool ok = std::abs(plan.cost - want) <= 1e-6 && MarginalViolation(prob, plan) <= 1e-9;
      fails += ok ? 0 : 1;
    }
    Report(log, "transport", cases, fails);
    all = all && fails == 0;
  }
  {
    int fails = 0;
    const int cases = 20;
    for (int i = 0; i < cases; ++i) {
      oracles::RandomStepModel model(4, 3, rng());
      DecodeConfig cfg;
      cfg.beam_width = 4 * 4 * 4 * 4;
      cfg.max_len = 4;
      cfg.block_n = 2;
      const Hypothesis got = BeamSearch(model, cfg);
      const Hypothesis want = oracles::BestSequenceBruteforce(model, cfg);
      bool ok = got.tokens == want.tokens && std::abs(got.logprob - want.logprob) <= 1e-12;
      fails += ok ? 0 : 1;
    }
    Report(log, "beam", cases, fails);
    all = all && fails == 0;
  }
  return all;
}

}  // namespace season
