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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace season {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual graph over source(0), supply nodes, demand nodes, sink.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : adj_(nodes) {}

  void AddEdge(int from, int to, double cap, double cost) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, cost});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0.0, -cost});
  }

  // Pushes up to `want` units; returns total cost.
  double Run(int s, int t, double want, double eps) {
    const int n = static_cast<int>(adj_.size());
    std::vector<double> potential(n, 0.0);
    double total_cost = 0.0;
    double pushed = 0.0;
    while (want - pushed > eps) {
      // Dense Dijkstra; the graph is complete bipartite so O(V^2) is right.
      std::vector<double> dist(n, kInf);
      std::vector<int> via(n, -1);
      std::vector<bool> done(n, false);
      dist[s] = 0.0;
      for (int iter = 0; iter < n; ++iter) {
        int u = -1;
        for (int v = 0; v < n; ++v) {
          if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
        }
        if (u < 0) break;
        done[u] = true;
        for (int id : adj_[u]) {
          const Edge& e = edges_[id];
          if (e.cap <= eps) continue;
          const double reduced = e.cost + potential[u] - potential[e.to];
          const double nd = dist[u] + std::max(0.0, reduced);
          if (nd < dist[e.to]) {
            dist[e.to] = nd;
            via[e.to] = id;
          }
        }
      }
      if (dist[t] == kInf) break;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      double bottleneck = want - pushed;
      for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
        bottleneck = std::min(bottleneck, edges_[via[v]].cap);
      }
      for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= bottleneck;
        edges_[via[v] ^ 1].cap += bottleneck;
        total_cost += bottleneck * edges_[via[v]].cost;
      }
      pushed += bottleneck;
    }
    return total_cost;
  }

  double FlowOn(int edge_id) const { return edges_[edge_id ^ 1].cap; }

 private:
  struct Edge {
    int to;
    double cap;
    double cost;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace

TransportPlan SolveTransport(const TransportProblem& problem) {
  const std::size_t rows = problem.supply.size();
  const std::size_t cols = problem.demand.size();
  if (problem.cost.size() != rows * cols) {
    throw std::invalid_argument("SolveTransport: cost shape mismatch");
  }
  const double total_supply =
      std::accumulate(problem.supply.begin(), problem.supply.end(), 0.0);
  const double total_demand =
      std::accumulate(problem.demand.begin(), problem.demand.end(), 0.0);
  if (std::abs(total_supply - total_demand) >
      1e-9 * std::max(1.0, total_supply)) {
    throw std::invalid_argument("SolveTransport: unbalanced marginals");
  }
  for (double v : problem.supply) {
    if (v < 0) throw std::invalid_argument("SolveTransport: negative supply");
  }
  for (double v : problem.demand) {
    if (v < 0) throw std::invalid_argument("SolveTransport: negative demand");
  }
  for (double c : problem.cost) {
    if (c < 0 || !std::isfinite(c)) {
      throw std::invalid_argument("SolveTransport: costs must be finite, >= 0");
    }
  }

  const int source = 0;
  const int sink = static_cast<int>(rows + cols + 1);
  MinCostFlow graph(static_cast<int>(rows + cols + 2));
  for (std::size_t i = 0; i < rows; ++i) {
    graph.AddEdge(source, static_cast<int>(1 + i), problem.supply[i], 0.0);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    graph.AddEdge(static_cast<int>(1 + rows + j), sink, problem.demand[j], 0.0);
  }
  std::vector<int> cell_edge(rows * cols);
  int next_edge = static_cast<int>(2 * (rows + cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      cell_edge[i * cols + j] = next_edge;
      next_edge += 2;
      graph.AddEdge(static_cast<int>(1 + i), static_cast<int>(1 + rows + j),
                    kInf, problem.cost[i * cols + j]);
    }
  }
  const double eps = 1e-15 * std::max(1.0, total_supply);
  graph.Run(source, sink, std::min(total_supply, total_demand), eps);

  TransportPlan plan;
  plan.flow.resize(rows * cols);
  for (std::size_t c = 0; c < rows * cols; ++c) {
    plan.flow[c] = graph.FlowOn(cell_edge[c]);
    plan.cost += plan.flow[c] * problem.cost[c];
  }
  return plan;
}

double MarginalViolation(const TransportProblem& problem,
                         const TransportPlan& plan) {
  const std::size_t rows = problem.supply.size();
  const std::size_t cols = problem.demand.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += plan.flow[i * cols + j];
    worst = std::max(worst, std::abs(s - problem.supply[i]));
  }
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += plan.flow[i * cols + j];
    worst = std::max(worst, std::abs(s - problem.demand[j]));
  }
  return worst;
}

}  // namespace season
