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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "spanfeat/core/grad_check.h"
#include "spanfeat/core/ops.h"
#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"

namespace spanfeat {
namespace {

TEST(Tensor, ShapeAndAccess) {
  Tensor t = Tensor::Matrix(2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(t.rank(), 2);
  EXPECT_EQ(t.rows(), 2);
  EXPECT_EQ(t.cols(), 3);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.at(1, 2), 6);
  EXPECT_EQ(t.row(1)[0], 4);
  EXPECT_EQ(t.ShapeString(), "[2x3]");
  EXPECT_THROW(Tensor({2, 0}), ShapeError);
  EXPECT_THROW(Tensor({2}, {1, 2, 3}), ShapeError);
}

TEST(Tape, BackwardNeedsScalar) {
  Tape tape;
  Var v = tape.Constant(Tensor::Vector({1, 2}));
  EXPECT_THROW(tape.Backward(v), std::exception);
}

TEST(Ops, MatMulValues) {
  Tape tape(false);
  Var a = tape.Constant(Tensor::Matrix(2, 2, {1, 2, 3, 4}));
  Var b = tape.Constant(Tensor::Matrix(2, 1, {5, 6}));
  Var c = MatMul(tape, a, b);
  EXPECT_EQ(c.tensor().at(0, 0), 17);
  EXPECT_EQ(c.tensor().at(1, 0), 39);
  Var bad = tape.Constant(Tensor::Matrix(3, 1, {1, 2, 3}));
  EXPECT_THROW(MatMul(tape, a, bad), ShapeError);
}

TEST(Ops, ConvSamePaddingKeepsLength) {
  // Width 2: padding is left-heavy, so one zero row goes on the left.
  Tape tape(false);
  Var seq = tape.Constant(Tensor::Matrix(3, 1, {1, 2, 3}));
  Var filters = tape.Constant(Tensor({2, 1, 1}, {10, 1}));
  Var bias = tape.Constant(Tensor::Vector({0.5}));
  Var out = Conv1dSame(tape, seq, filters, bias);
  ASSERT_EQ(out.rows(), 3);
  EXPECT_DOUBLE_EQ(out.tensor().at(0, 0), 1 * 1 + 0.5);
  EXPECT_DOUBLE_EQ(out.tensor().at(1, 0), 10 * 1 + 1 * 2 + 0.5);
  EXPECT_DOUBLE_EQ(out.tensor().at(2, 0), 10 * 2 + 1 * 3 + 0.5);
}

TEST(Ops, ConvOddWidthCentres) {
  Tape tape(false);
  Var seq = tape.Constant(Tensor::Matrix(3, 1, {1, 2, 3}));
  Var filters = tape.Constant(Tensor({3, 1, 1}, {100, 10, 1}));
  Var bias = tape.Constant(Tensor::Vector({0}));
  Var out = Conv1dSame(tape, seq, filters, bias);
  EXPECT_DOUBLE_EQ(out.tensor().at(0, 0), 10 * 1 + 1 * 2);
  EXPECT_DOUBLE_EQ(out.tensor().at(1, 0), 100 * 1 + 10 * 2 + 1 * 3);
  EXPECT_DOUBLE_EQ(out.tensor().at(2, 0), 100 * 2 + 10 * 3);
}

TEST(Ops, MaxOverTimeTieGoesToFirst) {
  Tensor seq = Tensor::Matrix(3, 2, {1, 5, 4, 5, 4, 0});
  Tape tape;
  Var pooled = MaxOverTime(tape, tape.Parameter(seq));
  EXPECT_EQ(pooled.tensor().values()[0], 4);
  EXPECT_EQ(pooled.tensor().values()[1], 5);
  Tensor w = Tensor::Vector({1, 1});
  tape.Backward(WeightedSum(tape, pooled, w));
  EXPECT_EQ(seq.grad()[2], 1);  // row 1, channel 0
  EXPECT_EQ(seq.grad()[4], 0);
  EXPECT_EQ(seq.grad()[1], 1);  // row 0, channel 1
  EXPECT_EQ(seq.grad()[3], 0);
}

TEST(Ops, SoftmaxCrossEntropyMatchesDefinition) {
  Tape tape(false);
  Var logits = tape.Constant(Tensor::Vector({1.0, 2.0, 3.0}));
  const double z = std::log(std::exp(1.0) + std::exp(2.0) + std::exp(3.0));
  EXPECT_NEAR(SoftmaxCrossEntropy(tape, logits, 0).scalar(), z - 1.0, 1e-12);
  EXPECT_THROW(SoftmaxCrossEntropy(tape, logits, 3), std::exception);
}

TEST(Ops, LogSumExpStable) {
  const double big[] = {1000.0, 1000.0};
  EXPECT_NEAR(LogSumExp(big), 1000.0 + std::log(2.0), 1e-12);
  const double inf = -std::numeric_limits<double>::infinity();
  const double none[] = {inf, inf};
  EXPECT_EQ(LogSumExp(none), inf);
}

TEST(Ops, GradientsAccumulateAcrossUses) {
  Tensor x = Tensor::Vector({2.0});
  Tape tape;
  Var v = tape.Parameter(x);
  const Var parts[] = {v, v, v};
  tape.Backward(SumScalars(tape, parts));
  EXPECT_EQ(x.grad()[0], 3.0);
}

TEST(GradCheck, DetectsWrongGradient) {
  // A deliberately broken op: forward x^2, backward claims 3x.
  Tensor x = Tensor::Vector({1.5});
  const ScalarFunction broken = [&](Tape& tape) {
    Var in = tape.Parameter(x);
    Var out = tape.Allocate({1});
    out.tensor().values()[0] = x.values()[0] * x.values()[0];
    tape.Record([in, out] { in.tensor().grad()[0] += 3 * in.tensor().values()[0] * out.tensor().grad()[0]; });
    return out;
  };
  Tensor* inputs[] = {&x};
  EXPECT_GT(GradCheck(broken, inputs), 0.1);
}

TEST(GradCheck, TanhChain) {
  Rng rng(3);
  Tensor a({3, 3});
  Tensor b({3, 2});
  InitUniform(a, 1.0, rng);
  InitUniform(b, 1.0, rng);
  Tensor w = Tensor::Matrix(3, 2, {1, -2, 0.5, 3, -1, 2});
  const ScalarFunction f = [&](Tape& tape) {
    return WeightedSum(tape, Tanh(tape, MatMul(tape, tape.Parameter(a), tape.Parameter(b))), w);
  };
  Tensor* inputs[] = {&a, &b};
  EXPECT_LT(GradCheck(f, inputs), 1e-7);
  EXPECT_EQ(a.grad()[0], 0.0);  // left zeroed
}

TEST(Parameters, CreateFindSnapshot) {
  ParameterStore store;
  Tensor& t = store.Create("w", {2});
  EXPECT_THROW(store.Create("w", {3}), std::exception);
  EXPECT_EQ(store.Find("w"), &t);
  EXPECT_EQ(store.Find("missing"), nullptr);
  t.values()[0] = 4;
  auto snap = store.Snapshot();
  t.values()[0] = 9;
  store.Restore(snap);
  EXPECT_EQ(t.values()[0], 4);
  EXPECT_EQ(store.NumValues(), 2u);
}

TEST(Parameters, PointersSurviveMove) {
  ParameterStore store;
  Tensor* t = &store.Create("w", {2});
  ParameterStore moved = std::move(store);
  EXPECT_EQ(moved.Find("w"), t);
}

TEST(Parameters, GlorotBounds) {
  Rng rng(1);
  Tensor t({40, 60});
  InitGlorotUniform(t, 40, 60, rng);
  const double limit = std::sqrt(6.0 / 100.0);
  for (double v : t.values()) {
    EXPECT_LE(std::abs(v), limit);
  }
}

}  // namespace
}  // namespace spanfeat
