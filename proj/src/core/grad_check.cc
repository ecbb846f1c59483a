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

#include "spanfeat/core/grad_check.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spanfeat {
namespace {

double Evaluate(const ScalarFunction& function) {
  Tape tape(/*record=*/false);
  Var out = function(tape);
  return out.scalar();
}

}  // namespace

double GradCheck(const ScalarFunction& function, std::span<Tensor* const> inputs,
                 double epsilon) {
  for (Tensor* t : inputs) t->ZeroGrad();
  std::vector<std::vector<double>> analytic;
  {
    Tape tape;
    Var out = function(tape);
    if (out.size() != 1) {
      throw ShapeError("grad_check: function output must be scalar, got " +
                       out.tensor().ShapeString());
    }
    tape.Backward(out);
    for (Tensor* t : inputs) {
      analytic.emplace_back(t->grad().begin(), t->grad().end());
    }
  }
  // Norm-wise relative error per input tensor: elementwise ratios are
  // dominated by round-off wherever a gradient entry is close to zero.
  double max_error = 0.0;
  for (size_t k = 0; k < inputs.size(); ++k) {
    auto values = inputs[k]->values();
    double diff_sq = 0.0, analytic_sq = 0.0, numeric_sq = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
      const double saved = values[i];
      values[i] = saved + epsilon;
      const double plus = Evaluate(function);
      values[i] = saved - epsilon;
      const double minus = Evaluate(function);
      values[i] = saved;
      const double numeric = (plus - minus) / (2.0 * epsilon);
      const double a = analytic[k][i];
      diff_sq += (a - numeric) * (a - numeric);
      analytic_sq += a * a;
      numeric_sq += numeric * numeric;
    }
    const double denom =
        std::max({std::sqrt(analytic_sq), std::sqrt(numeric_sq), 1e-8});
    max_error = std::max(max_error, std::sqrt(diff_sq) / denom);
  }
  for (Tensor* t : inputs) t->ZeroGrad();
  return max_error;
}

}  // namespace spanfeat
