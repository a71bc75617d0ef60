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

#include "season/transport.h"

#include <random>

#include "gtest/gtest.h"
#include "season/oracles.h"

namespace season {
namespace {

TEST(TransportTest, IdentityPlanIsFree) {
  const TransportProblem p{{0.5, 0.5}, {0.5, 0.5}, {0, 1, 1, 0}};
  const TransportPlan plan = SolveTransport(p);
  EXPECT_NEAR(plan.cost, 0.0, 1e-15);
  EXPECT_NEAR(plan.flow[0], 0.5, 1e-15);
  EXPECT_NEAR(plan.flow[3], 0.5, 1e-15);
  EXPECT_LE(MarginalViolation(p, plan), 1e-15);
}

TEST(TransportTest, SinglePoint) {
  const TransportProblem p{{1.0}, {1.0}, {2.5}};
  EXPECT_DOUBLE_EQ(SolveTransport(p).cost, 2.5);
}

TEST(TransportTest, SplitsMass) {
  // Supply (1) must reach two sinks; cost is the weighted average.
  const TransportProblem p{{1.0}, {0.25, 0.75}, {2.0, 4.0}};
  const TransportPlan plan = SolveTransport(p);
  EXPECT_NEAR(plan.cost, 0.25 * 2 + 0.75 * 4, 1e-12);
}

TEST(TransportTest, RejectsInvalidProblems) {
  EXPECT_THROW(SolveTransport({{1.0}, {0.5}, {1.0}}), std::invalid_argument);
  EXPECT_THROW(SolveTransport({{1.0}, {1.0}, {-1.0}}), std::invalid_argument);
  EXPECT_THROW(SolveTransport({{-1.0, 2.0}, {1.0}, {1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(SolveTransport({{1.0}, {1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST(TransportTest, MatchesOracleOnGrid) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> side(1, 3);
  std::uniform_real_distribution<double> cost(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    auto masses = [&](int k) {
      std::vector<double> m(k, 0.25);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int q = k; q < 4; ++q) m[pick(rng)] += 0.25;
      return m;
    };
    TransportProblem p;
    p.supply = masses(side(rng));
    p.demand = masses(side(rng));
    for (std::size_t k = 0; k < p.supply.size() * p.demand.size(); ++k) {
      p.cost.push_back(cost(rng));
    }
    const TransportPlan plan = SolveTransport(p);
    ASSERT_NEAR(plan.cost, oracles::WmdBruteforce(p.supply, p.demand, p.cost), 1e-9);
    ASSERT_LE(MarginalViolation(p, plan), 1e-12);
    for (double f : plan.flow) ASSERT_GE(f, 0.0);
  }
}

TEST(TransportTest, LargerInstanceIsBalanced) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  TransportProblem p;
  double sp = 0, sd = 0;
  for (int i = 0; i < 30; ++i) sp += (p.supply.push_back(u(rng)), p.supply.back());
  for (int j = 0; j < 25; ++j) sd += (p.demand.push_back(u(rng)), p.demand.back());
  for (auto& d : p.demand) d *= sp / sd;
  for (int k = 0; k < 30 * 25; ++k) p.cost.push_back(u(rng));
  const TransportPlan plan = SolveTransport(p);
  EXPECT_LE(MarginalViolation(p, plan), 1e-9);
}

}  // namespace
}  // namespace season
