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

#include "season/kernels.h"

#include <omp.h>

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace season::kernels {
namespace {

std::vector<double> Random(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

using KernelFn = void (*)(const double*, const double*, double*, int, int, int, bool);

// Naive reference element (i, j) for each layout.
double Reference(int layout, const std::vector<double>& a, const std::vector<double>& b,
                 int i, int j, int m, int k, int n) {
  double s = 0;
  for (int p = 0; p < k; ++p) {
    const double av = layout == 2 ? a[p * m + i] : a[i * k + p];
    const double bv = layout == 1 ? b[j * k + p] : b[p * n + j];
    s += av * bv;
  }
  return s;
}

class KernelsTest : public ::testing::TestWithParam<int> {};

TEST_P(KernelsTest, SerialMatchesNaiveAndParallelIsBitIdentical) {
  const int layout = GetParam();
  const KernelFn serial_fn[] = {serial::MatMul, serial::MatMulTransB, serial::MatMulTransA};
  const KernelFn parallel_fn[] = {parallel::MatMul, parallel::MatMulTransB,
                                  parallel::MatMulTransA};
  const KernelFn dispatch_fn[] = {MatMul, MatMulTransB, MatMulTransA};
  std::mt19937_64 rng(100 + layout);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (const auto& [m, k, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 1}, {3, 5, 7}, {17, 64, 9}, {64, 64, 64}, {130, 33, 70}}) {
    const auto a = Random(static_cast<std::size_t>(m) * k, rng);
    const auto b = Random(static_cast<std::size_t>(k) * n, rng);
    const auto init = Random(static_cast<std::size_t>(m) * n, rng);
    for (bool acc : {false, true}) {
      auto cs = init, cp = init, cd = init;
      serial_fn[layout](a.data(), b.data(), cs.data(), m, k, n, acc);
      parallel_fn[layout](a.data(), b.data(), cp.data(), m, k, n, acc);
      dispatch_fn[layout](a.data(), b.data(), cd.data(), m, k, n, acc);
      ASSERT_EQ(cs, cp) << m << "x" << k << "x" << n;
      ASSERT_EQ(cs, cd);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          const double want = Reference(layout, a, b, i, j, m, k, n) +
                              (acc ? init[i * n + j] : 0.0);
          ASSERT_NEAR(cs[i * n + j], want, 1e-10);
        }
      }
    }
  }
  omp_set_num_threads(saved);
}

INSTANTIATE_TEST_SUITE_P(Layouts, KernelsTest, ::testing::Values(0, 1, 2));

}  // namespace
}  // namespace season::kernels
