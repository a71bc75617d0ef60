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

#ifndef SEASON_AUTOGRAD_H_
#define SEASON_AUTOGRAD_H_

#include <functional>
#include <span>
#include <vector>

#include "season/matrix.h"

namespace season::ag {

struct Var {
  int id = -1;
};

// Reverse-mode tape over dense matrices. Nodes are appended in evaluation
// order, so a reverse sweep visits every node after all of its consumers.
// With recording off, values are computed but no backward closures are kept.
class Tape {
 public:
  explicit Tape(bool record = true) : record_(record) {}

  Var Constant(Matrix value);
  // Leaf bound to an external matrix; its gradient is reported under `slot`.
  Var Parameter(const Matrix* value, int slot);

  const Matrix& Value(Var v) const;
  Matrix& Grad(Var v);
  bool RequiresGrad(Var v) const { return nodes_[v.id].requires_grad; }
  bool recording() const { return record_; }

  // Seeds d(loss)/d(loss) = 1 for a 1x1 node and sweeps backwards.
  void Backward(Var loss);

  // Calls fn(slot, grad) for every parameter leaf that received a gradient.
  void ForEachParameterGrad(
      const std::function<void(int, const Matrix&)>& fn) const;

  // Internal: used by the op implementations.
  using BackwardFn = std::function<void(Tape&, Var self)>;
  Var Push(Matrix value, bool requires_grad, BackwardFn backward);

 private:
  struct Node {
    Matrix value;
    const Matrix* external = nullptr;
    Matrix grad;
    BackwardFn backward;
    int slot = -1;
    bool requires_grad = false;
  };
  std::vector<Node> nodes_;
  bool record_;
};

Var MatMul(Tape& t, Var a, Var b);        // a * b
Var MatMulTransB(Tape& t, Var a, Var b);  // a * b^T
Var Add(Tape& t, Var a, Var b);
Var AddRowBias(Tape& t, Var x, Var bias);  // bias is 1 x cols
Var Scale(Tape& t, Var x, double s);
Var Gelu(Tape& t, Var x);  // tanh approximation
Var LayerNorm(Tape& t, Var x, Var gain, Var bias, double eps = 1e-5);
// Row-wise softmax. With causal=true entry (i, j) is masked when
// j > i + (cols - rows).
Var SoftmaxRows(Tape& t, Var x, bool causal);
Var SliceCols(Tape& t, Var x, int begin, int end);
Var ConcatCols(Tape& t, std::span<const Var> parts);
Var GatherRows(Tape& t, Var table, std::span<const int> rows);
// Sum over rows of -log softmax(logits)[row][target[row]]; 1 x 1.
Var CrossEntropySum(Tape& t, Var logits, std::span<const int> targets);

}  // namespace season::ag

#endif  // SEASON_AUTOGRAD_H_
