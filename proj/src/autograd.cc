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

#include "season/autograd.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "season/kernels.h"

namespace season::ag {
namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("autograd: ") + what);
}

}  // namespace

Var Tape::Constant(Matrix value) { return Push(std::move(value), false, nullptr); }

Var Tape::Parameter(const Matrix* value, int slot) {
  Node n;
  n.external = value;
  n.slot = slot;
  n.requires_grad = record_;
  nodes_.push_back(std::move(n));
  return {static_cast<int>(nodes_.size()) - 1};
}

const Matrix& Tape::Value(Var v) const {
  const Node& n = nodes_[v.id];
  return n.external ? *n.external : n.value;
}

Matrix& Tape::Grad(Var v) {
  Node& n = nodes_[v.id];
  if (n.grad.empty()) {
    const Matrix& val = n.external ? *n.external : n.value;
    n.grad = Matrix(val.rows, val.cols);
  }
  return n.grad;
}

Var Tape::Push(Matrix value, bool requires_grad, BackwardFn backward) {
  Node n;
  n.value = std::move(value);
  n.requires_grad = record_ && requires_grad;
  if (n.requires_grad) n.backward = std::move(backward);
  nodes_.push_back(std::move(n));
  return {static_cast<int>(nodes_.size()) - 1};
}

void Tape::Backward(Var loss) {
  Require(record_, "Backward on a non-recording tape");
  Require(Value(loss).rows == 1 && Value(loss).cols == 1, "loss must be 1x1");
  Grad(loss).data[0] += 1.0;
  for (int i = loss.id; i >= 0; --i) {
    Node& n = nodes_[i];
    if (n.backward && !n.grad.empty()) n.backward(*this, Var{i});
  }
}

void Tape::ForEachParameterGrad(
    const std::function<void(int, const Matrix&)>& fn) const {
  for (const Node& n : nodes_) {
    if (n.slot >= 0 && !n.grad.empty()) fn(n.slot, n.grad);
  }
}

Var MatMul(Tape& t, Var a, Var b) {
  const Matrix& A = t.Value(a);
  const Matrix& B = t.Value(b);
  Require(A.cols == B.rows, "MatMul shape");
  Matrix C(A.rows, B.cols);
  kernels::MatMul(A.data.data(), B.data.data(), C.data.data(), A.rows, A.cols,
                  B.cols, false);
  return t.Push(std::move(C), t.RequiresGrad(a) || t.RequiresGrad(b),
                [a, b](Tape& tp, Var self) {
                  const Matrix& A = tp.Value(a);
                  const Matrix& B = tp.Value(b);
                  const Matrix& G = tp.Grad(self);
                  // dA = G B^T, dB = A^T G
                  if (tp.RequiresGrad(a)) {
                    kernels::MatMulTransB(G.data.data(), B.data.data(),
                                          tp.Grad(a).data.data(), A.rows,
                                          B.cols, A.cols, true);
                  }
                  if (tp.RequiresGrad(b)) {
                    kernels::MatMulTransA(A.data.data(), G.data.data(),
                                          tp.Grad(b).data.data(), B.rows,
                                          A.rows, B.cols, true);
                  }
                });
}

Var MatMulTransB(Tape& t, Var a, Var b) {
  const Matrix& A = t.Value(a);
  const Matrix& B = t.Value(b);
  Require(A.cols == B.cols, "MatMulTransB shape");
  Matrix C(A.rows, B.rows);
  kernels::MatMulTransB(A.data.data(), B.data.data(), C.data.data(), A.rows,
                        A.cols, B.rows, false);
  return t.Push(std::move(C), t.RequiresGrad(a) || t.RequiresGrad(b),
                [a, b](Tape& tp, Var self) {
                  const Matrix& A = tp.Value(a);
                  const Matrix& B = tp.Value(b);
                  const Matrix& G = tp.Grad(self);
                  // dA = G B, dB = G^T A
                  if (tp.RequiresGrad(a)) {
                    kernels::MatMul(G.data.data(), B.data.data(),
                                    tp.Grad(a).data.data(), A.rows, B.rows,
                                    A.cols, true);
                  }
                  if (tp.RequiresGrad(b)) {
                    kernels::MatMulTransA(G.data.data(), A.data.data(),
                                          tp.Grad(b).data.data(), B.rows,
                                          A.rows, A.cols, true);
                  }
                });
}

Var Add(Tape& t, Var a, Var b) {
  const Matrix& A = t.Value(a);
  const Matrix& B = t.Value(b);
  Require(A.SameShape(B), "Add shape");
  Matrix C = A;
  for (std::size_t i = 0; i < C.size(); ++i) C.data[i] += B.data[i];
  return t.Push(std::move(C), t.RequiresGrad(a) || t.RequiresGrad(b),
                [a, b](Tape& tp, Var self) {
                  const Matrix& G = tp.Grad(self);
                  for (Var v : {a, b}) {
                    if (!tp.RequiresGrad(v)) continue;
                    Matrix& D = tp.Grad(v);
                    for (std::size_t i = 0; i < D.size(); ++i) D.data[i] += G.data[i];
                  }
                });
}

Var AddRowBias(Tape& t, Var x, Var bias) {
  const Matrix& X = t.Value(x);
  const Matrix& B = t.Value(bias);
  Require(B.rows == 1 && B.cols == X.cols, "AddRowBias shape");
  Matrix C = X;
  for (int r = 0; r < C.rows; ++r) {
    for (int c = 0; c < C.cols; ++c) C(r, c) += B.data[c];
  }
  return t.Push(std::move(C), t.RequiresGrad(x) || t.RequiresGrad(bias),
                [x, bias](Tape& tp, Var self) {
                  const Matrix& G = tp.Grad(self);
                  if (tp.RequiresGrad(x)) {
                    Matrix& D = tp.Grad(x);
                    for (std::size_t i = 0; i < D.size(); ++i) D.data[i] += G.data[i];
                  }
                  if (tp.RequiresGrad(bias)) {
                    Matrix& D = tp.Grad(bias);
                    for (int r = 0; r < G.rows; ++r) {
                      for (int c = 0; c < G.cols; ++c) D.data[c] += G(r, c);
                    }
                  }
                });
}

Var Scale(Tape& t, Var x, double s) {
  Matrix C = t.Value(x);
  for (double& v : C.data) v *= s;
  return t.Push(std::move(C), t.RequiresGrad(x), [x, s](Tape& tp, Var self) {
    const Matrix& G = tp.Grad(self);
    Matrix& D = tp.Grad(x);
    for (std::size_t i = 0; i < D.size(); ++i) D.data[i] += s * G.data[i];
  });
}

namespace {

constexpr double kGeluC = 0.7978845608028654;  // sqrt(2 / pi)
constexpr double kGeluA = 0.044715;

}  // namespace

Var Gelu(Tape& t, Var x) {
  Matrix C = t.Value(x);
  for (double& v : C.data) {
    const double u = kGeluC * (v + kGeluA * v * v * v);
    v = 0.5 * v * (1.0 + std::tanh(u));
  }
  return t.Push(std::move(C), t.RequiresGrad(x), [x](Tape& tp, Var self) {
    const Matrix& X = tp.Value(x);
    const Matrix& G = tp.Grad(self);
    Matrix& D = tp.Grad(x);
    for (std::size_t i = 0; i < D.size(); ++i) {
      const double v = X.data[i];
      const double th = std::tanh(kGeluC * (v + kGeluA * v * v * v));
      const double du = kGeluC * (1.0 + 3.0 * kGeluA * v * v);
      D.data[i] += G.data[i] * (0.5 * (1.0 + th) + 0.5 * v * (1.0 - th * th) * du);
    }
  });
}

Var LayerNorm(Tape& t, Var x, Var gain, Var bias, double eps) {
  const Matrix& X = t.Value(x);
  const Matrix& Gn = t.Value(gain);
  const Matrix& Bs = t.Value(bias);
  Require(Gn.rows == 1 && Gn.cols == X.cols && Bs.SameShape(Gn),
          "LayerNorm shape");
  const int n = X.cols;
  Matrix normalized(X.rows, n);
  std::vector<double> inv_std(X.rows);
  Matrix Y(X.rows, n);
  for (int r = 0; r < X.rows; ++r) {
    const double* xr = X.row(r);
    double mean = 0.0;
    for (int c = 0; c < n; ++c) mean += xr[c];
    mean /= n;
    double var = 0.0;
    for (int c = 0; c < n; ++c) var += (xr[c] - mean) * (xr[c] - mean);
    var /= n;
    inv_std[r] = 1.0 / std::sqrt(var + eps);
    for (int c = 0; c < n; ++c) {
      normalized(r, c) = (xr[c] - mean) * inv_std[r];
      Y(r, c) = Gn.data[c] * normalized(r, c) + Bs.data[c];
    }
  }
  const bool needs =
      t.RequiresGrad(x) || t.RequiresGrad(gain) || t.RequiresGrad(bias);
  return t.Push(
      std::move(Y), needs,
      [x, gain, bias, normalized = std::move(normalized),
       inv_std = std::move(inv_std)](Tape& tp, Var self) {
        const Matrix& G = tp.Grad(self);
        const Matrix& Gn = tp.Value(gain);
        const int n = G.cols;
        if (tp.RequiresGrad(gain) || tp.RequiresGrad(bias)) {
          Matrix& dg = tp.Grad(gain);
          Matrix& db = tp.Grad(bias);
          for (int r = 0; r < G.rows; ++r) {
            for (int c = 0; c < n; ++c) {
              dg.data[c] += G(r, c) * normalized(r, c);
              db.data[c] += G(r, c);
            }
          }
        }
        if (!tp.RequiresGrad(x)) return;
        Matrix& D = tp.Grad(x);
        std::vector<double> dxhat(n);
        for (int r = 0; r < G.rows; ++r) {
          double mean_d = 0.0;
          double mean_dx = 0.0;
          for (int c = 0; c < n; ++c) {
            dxhat[c] = G(r, c) * Gn.data[c];
            mean_d += dxhat[c];
            mean_dx += dxhat[c] * normalized(r, c);
          }
          mean_d /= n;
          mean_dx /= n;
          for (int c = 0; c < n; ++c) {
            D(r, c) += inv_std[r] * (dxhat[c] - mean_d - normalized(r, c) * mean_dx);
          }
        }
      });
}

Var SoftmaxRows(Tape& t, Var x, bool causal) {
  const Matrix& X = t.Value(x);
  Matrix Y(X.rows, X.cols);
  const int offset = X.cols - X.rows;
  for (int r = 0; r < X.rows; ++r) {
    const int limit = causal ? std::min(X.cols, r + offset + 1) : X.cols;
    Require(limit > 0, "SoftmaxRows: fully masked row");
    double mx = X(r, 0);
    for (int c = 1; c < limit; ++c) mx = std::max(mx, X(r, c));
    double total = 0.0;
    for (int c = 0; c < limit; ++c) {
      Y(r, c) = std::exp(X(r, c) - mx);
      total += Y(r, c);
    }
    for (int c = 0; c < limit; ++c) Y(r, c) /= total;
  }
  return t.Push(std::move(Y), t.RequiresGrad(x), [x](Tape& tp, Var self) {
    const Matrix& Y = tp.Value(self);
    const Matrix& G = tp.Grad(self);
    Matrix& D = tp.Grad(x);
    for (int r = 0; r < Y.rows; ++r) {
      double dot = 0.0;
      for (int c = 0; c < Y.cols; ++c) dot += G(r, c) * Y(r, c);
      for (int c = 0; c < Y.cols; ++c) D(r, c) += Y(r, c) * (G(r, c) - dot);
    }
  });
}

Var SliceCols(Tape& t, Var x, int begin, int end) {
  const Matrix& X = t.Value(x);
  Require(0 <= begin && begin < end && end <= X.cols, "SliceCols range");
  Matrix Y(X.rows, end - begin);
  for (int r = 0; r < X.rows; ++r) {
    std::copy(X.row(r) + begin, X.row(r) + end, Y.row(r));
  }
  return t.Push(std::move(Y), t.RequiresGrad(x), [x, begin](Tape& tp, Var self) {
    const Matrix& G = tp.Grad(self);
    Matrix& D = tp.Grad(x);
    for (int r = 0; r < G.rows; ++r) {
      for (int c = 0; c < G.cols; ++c) D(r, begin + c) += G(r, c);
    }
  });
}

Var ConcatCols(Tape& t, std::span<const Var> parts) {
  Require(!parts.empty(), "ConcatCols: no parts");
  const int rows = t.Value(parts[0]).rows;
  int cols = 0;
  bool needs = false;
  for (Var p : parts) {
    Require(t.Value(p).rows == rows, "ConcatCols rows");
    cols += t.Value(p).cols;
    needs = needs || t.RequiresGrad(p);
  }
  Matrix Y(rows, cols);
  int offset = 0;
  for (Var p : parts) {
    const Matrix& P = t.Value(p);
    for (int r = 0; r < rows; ++r) std::copy(P.row(r), P.row(r) + P.cols, Y.row(r) + offset);
    offset += P.cols;
  }
  std::vector<Var> saved(parts.begin(), parts.end());
  return t.Push(std::move(Y), needs, [saved](Tape& tp, Var self) {
    const Matrix& G = tp.Grad(self);
    int offset = 0;
    for (Var p : saved) {
      const int w = tp.Value(p).cols;
      if (tp.RequiresGrad(p)) {
        Matrix& D = tp.Grad(p);
        for (int r = 0; r < G.rows; ++r) {
          for (int c = 0; c < w; ++c) D(r, c) += G(r, offset + c);
        }
      }
      offset += w;
    }
  });
}

Var GatherRows(Tape& t, Var table, std::span<const int> rows) {
  const Matrix& T = t.Value(table);
  Matrix Y(static_cast<int>(rows.size()), T.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Require(rows[i] >= 0 && rows[i] < T.rows, "GatherRows index");
    std::copy(T.row(rows[i]), T.row(rows[i]) + T.cols, Y.row(static_cast<int>(i)));
  }
  std::vector<int> saved(rows.begin(), rows.end());
  return t.Push(std::move(Y), t.RequiresGrad(table),
                [table, saved = std::move(saved)](Tape& tp, Var self) {
                  const Matrix& G = tp.Grad(self);
                  Matrix& D = tp.Grad(table);
                  for (std::size_t i = 0; i < saved.size(); ++i) {
                    const double* g = G.row(static_cast<int>(i));
                    double* d = D.row(saved[i]);
                    for (int c = 0; c < G.cols; ++c) d[c] += g[c];
                  }
                });
}

Var CrossEntropySum(Tape& t, Var logits, std::span<const int> targets) {
  const Matrix& L = t.Value(logits);
  Require(static_cast<int>(targets.size()) == L.rows, "CrossEntropy rows");
  Matrix probs(L.rows, L.cols);
  double loss = 0.0;
  for (int r = 0; r < L.rows; ++r) {
    Require(targets[r] >= 0 && targets[r] < L.cols, "CrossEntropy target");
    double mx = L(r, 0);
    for (int c = 1; c < L.cols; ++c) mx = std::max(mx, L(r, c));
    double total = 0.0;
    for (int c = 0; c < L.cols; ++c) {
      probs(r, c) = std::exp(L(r, c) - mx);
      total += probs(r, c);
    }
    for (int c = 0; c < L.cols; ++c) probs(r, c) /= total;
    loss += std::log(total) + mx - L(r, targets[r]);
  }
  std::vector<int> saved(targets.begin(), targets.end());
  return t.Push(Matrix(1, 1, loss), t.RequiresGrad(logits),
                [logits, probs = std::move(probs), saved = std::move(saved)](
                    Tape& tp, Var self) {
                  const double g = tp.Grad(self).data[0];
                  Matrix& D = tp.Grad(logits);
                  for (int r = 0; r < probs.rows; ++r) {
                    for (int c = 0; c < probs.cols; ++c) {
                      D(r, c) += g * (probs(r, c) - (c == saved[r] ? 1.0 : 0.0));
                    }
                  }
                });
}

}  // namespace season::ag
