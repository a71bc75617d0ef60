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

#ifndef SEASON_TRANSPORT_H_
#define SEASON_TRANSPORT_H_

#include <vector>

namespace season {

// Dense row-major cost matrix, supply.size() x demand.size().
struct TransportProblem {
  std::vector<double> supply;
  std::vector<double> demand;
  std::vector<double> cost;
};

struct TransportPlan {
  std::vector<double> flow;  // row-major, same shape as cost
  double cost = 0.0;
};

// Exact balanced transport via successive shortest paths (min-cost flow with
// Johnson potentials). Supply and demand must be non-negative with equal
// totals (within 1e-9 relative); costs non-negative.
TransportPlan SolveTransport(const TransportProblem& problem);

// Largest absolute deviation of the plan's row/column sums from the marginals.
double MarginalViolation(const TransportProblem& problem,
                         const TransportPlan& plan);

}  // namespace season

#endif  // SEASON_TRANSPORT_H_
