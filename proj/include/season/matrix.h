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

#ifndef SEASON_MATRIX_H_
#define SEASON_MATRIX_H_

#include <cstddef>
#include <vector>

namespace season {

// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const {
    return data.data() + static_cast<std::size_t>(r) * cols;
  }
  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  bool SameShape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

}  // namespace season

#endif  // SEASON_MATRIX_H_
