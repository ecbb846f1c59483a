// Copyright 2026 The spanfeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANFEAT_CORE_OPS_H_
#define SPANFEAT_CORE_OPS_H_

#include <span>
#include <vector>

#include "spanfeat/core/tape.h"

// Differentiable primitives. Each op computes its forward value immediately
// and records a gradient rule on the tape.

namespace spanfeat {

// [m x p] * [p x q] -> [m x q]. A rank-1 `a` is treated as a single row and
// yields a rank-1 result.
Var MatMul(Tape& tape, Var a, Var b);

Var Add(Tape& tape, Var a, Var b);

// Adds `bias` [q] to every row of `x` [.. x q].
Var AddBias(Tape& tape, Var x, Var bias);

Var Scale(Tape& tape, Var x, double factor);

// Sum of scalar-shaped inputs.
Var SumScalars(Tape& tape, std::span<const Var> scalars);

// sum_i x[i] * weights[i]; weights are constants.
Var WeightedSum(Tape& tape, Var x, const Tensor& weights);

Var Relu(Tape& tape, Var x);
Var Tanh(Tape& tape, Var x);
Var Sigmoid(Tape& tape, Var x);

// seq [n x e], filters [w x e x f], bias [f] -> [n x f]. Zero padding of
// w/2 positions on the left and w-1-w/2 on the right keeps the output length
// equal to n.
Var Conv1dSame(Tape& tape, Var seq, Var filters, Var bias);

// [n x f] -> [f]; gradient goes to the first position attaining the max.
Var MaxOverTime(Tape& tape, Var seq);

// Concatenation along the last axis. All parts must have equal rank and
// equal leading dimensions.
Var Concat(Tape& tape, std::span<const Var> parts);

// Selected rows of [n x e], in the given order -> [k x e].
Var GatherRows(Tape& tape, Var x, std::span<const int> rows);

// k vectors of length e -> [k x e].
Var StackRows(Tape& tape, std::span<const Var> rows);

// Row r of [n x e] -> [e].
Var Row(Tape& tape, Var x, int r);

// Rows of table [V x e] selected by ids -> [n x e].
Var EmbeddingLookup(Tape& tape, Var table, std::span<const int> ids);

struct LstmWeights {
  Var input;      // [e x 4h], gate blocks ordered input, forget, cell, output
  Var recurrent;  // [h x 4h]
  Var bias;       // [4h]
};

struct LstmState {
  Var h;
  Var c;
};

// One LSTM step without peepholes.
LstmState LstmCell(Tape& tape, Var x, Var h_prev, Var c_prev,
                   const LstmWeights& weights);

// -log softmax(logits)[gold], via shifted log-sum-exp.
Var SoftmaxCrossEntropy(Tape& tape, Var logits, int gold);

// Numerically stable log(sum(exp(values))); -inf when every input is -inf.
double LogSumExp(std::span<const double> values);

}  // namespace spanfeat

#endif  // SPANFEAT_CORE_OPS_H_
