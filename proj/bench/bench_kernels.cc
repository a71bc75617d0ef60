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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "season/data.h"
#include "season/evaluation.h"
#include "season/kernels.h"

namespace {

std::vector<double> RandomBuffer(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

template <void (*Kernel)(const double*, const double*, double*, int, int, int, bool)>
void BM_MatMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = RandomBuffer(static_cast<std::size_t>(n) * n, 1);
  const auto b = RandomBuffer(static_cast<std::size_t>(n) * n, 2);
  std::vector<double> c(static_cast<std::size_t>(n) * n);
  for (auto _ : state) {
    Kernel(a.data(), b.data(), c.data(), n, n, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * 2LL * n * n * n);
}

BENCHMARK_TEMPLATE(BM_MatMul, season::kernels::serial::MatMul)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_TEMPLATE(BM_MatMul, season::kernels::parallel::MatMul)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_TEMPLATE(BM_MatMul, season::kernels::serial::MatMulTransB)->Arg(128);
BENCHMARK_TEMPLATE(BM_MatMul, season::kernels::parallel::MatMulTransB)->Arg(128);

std::vector<season::TextPair> EvalPairs(int count) {
  const auto corpus = season::SyntheticCorpus(count, 7);
  std::vector<season::TextPair> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    // Score each summary against its neighbour's to avoid trivial matches.
    pairs.push_back({corpus[i].summary, corpus[(i + 1) % corpus.size()].document});
  }
  return pairs;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto pairs = EvalPairs(static_cast<int>(state.range(0)));
  season::EvalOptions opts;
  opts.metrics = {"rouge1", "rouge2", "rougeL", "rougeLsum", "meteor"};
  for (auto _ : state) benchmark::DoNotOptimize(season::ScoreExamplesSerial(pairs, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto pairs = EvalPairs(static_cast<int>(state.range(0)));
  season::EvalOptions opts;
  opts.metrics = {"rouge1", "rouge2", "rougeL", "rougeLsum", "meteor"};
  for (auto _ : state) benchmark::DoNotOptimize(season::ScoreExamplesParallel(pairs, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_EvaluateSerial)->Arg(256);
BENCHMARK(BM_EvaluateParallel)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
