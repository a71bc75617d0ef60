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

#include <cstddef>

namespace season::kernels {
namespace {

// Below this many multiply-adds the fork/join cost dominates.
constexpr long kParallelThreshold = 1L << 15;

bool UseParallel(int m, int k, int n) {
  return static_cast<long>(m) * k * n >= kParallelThreshold && m > 1 &&
         !omp_in_parallel() && omp_get_max_threads() > 1;
}

inline void MatMulRow(const double* a, const double* b, double* c, int i, int k,
                      int n, bool accumulate) {
  double* ci = c + static_cast<std::size_t>(i) * n;
  if (!accumulate) {
    for (int j = 0; j < n; ++j) ci[j] = 0.0;
  }
  const double* ai = a + static_cast<std::size_t>(i) * k;
  for (int p = 0; p < k; ++p) {
    const double av = ai[p];
    const double* bp = b + static_cast<std::size_t>(p) * n;
    for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
  }
}

inline void MatMulTransBRow(const double* a, const double* b, double* c, int i,
                            int k, int n, bool accumulate) {
  const double* ai = a + static_cast<std::size_t>(i) * k;
  double* ci = c + static_cast<std::size_t>(i) * n;
  for (int j = 0; j < n; ++j) {
    const double* bj = b + static_cast<std::size_t>(j) * k;
    double acc = accumulate ? ci[j] : 0.0;
    for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
    ci[j] = acc;
  }
}

inline void MatMulTransARow(const double* a, const double* b, double* c, int i,
                            int m, int k, int n, bool accumulate) {
  double* ci = c + static_cast<std::size_t>(i) * n;
  if (!accumulate) {
    for (int j = 0; j < n; ++j) ci[j] = 0.0;
  }
  for (int p = 0; p < k; ++p) {
    const double av = a[static_cast<std::size_t>(p) * m + i];
    const double* bp = b + static_cast<std::size_t>(p) * n;
    for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
  }
}

}  // namespace

namespace serial {

void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate) {
  for (int i = 0; i < m; ++i) MatMulRow(a, b, c, i, k, n, accumulate);
}

void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
  for (int i = 0; i < m; ++i) MatMulTransBRow(a, b, c, i, k, n, accumulate);
}

void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
  for (int i = 0; i < m; ++i) MatMulTransARow(a, b, c, i, m, k, n, accumulate);
}

}  // namespace serial

namespace parallel {

void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) MatMulRow(a, b, c, i, k, n, accumulate);
}

void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) MatMulTransBRow(a, b, c, i, k, n, accumulate);
}

void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) MatMulTransARow(a, b, c, i, m, k, n, accumulate);
}

}  // namespace parallel

void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate) {
  if (UseParallel(m, k, n)) {
    parallel::MatMul(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMul(a, b, c, m, k, n, accumulate);
  }
}

void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
  if (UseParallel(m, k, n)) {
    parallel::MatMulTransB(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMulTransB(a, b, c, m, k, n, accumulate);
  }
}

void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate) {
  if (UseParallel(m, k, n)) {
    parallel::MatMulTransA(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMulTransA(a, b, c, m, k, n, accumulate);
  }
}

}  // namespace season::kernels
