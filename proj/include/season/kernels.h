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

#ifndef SEASON_KERNELS_H_
#define SEASON_KERNELS_H_

namespace season::kernels {

// Dense products on row-major buffers. With accumulate=false the output is
// overwritten, otherwise added to. Every output element is reduced over the
// inner dimension in ascending order, so the serial and parallel variants are
// bit-identical for any thread count.
//
//   MatMul:       c[m x n] (+)= a[m x k] * b[k x n]
//   MatMulTransB: c[m x n] (+)= a[m x k] * b[n x k]^T
//   MatMulTransA: c[m x n] (+)= a[k x m]^T * b[k x n]
namespace serial {
void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate);
void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);
void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);
}  // namespace serial

namespace parallel {
void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate);
void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);
void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);
}  // namespace parallel

// Picks the parallel variant for large products outside parallel regions.
void MatMul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate);
void MatMulTransB(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);
void MatMulTransA(const double* a, const double* b, double* c, int m, int k,
                  int n, bool accumulate);

}  // namespace season::kernels

#endif  // SEASON_KERNELS_H_
