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

#include "spanfeat/models/pooling.h"

#include <stdexcept>

#include "spanfeat/core/ops.h"

namespace spanfeat {

ParallelCnnPooler::ParallelCnnPooler(ParameterStore& store, const std::string& prefix,
                                     int input_dim, const std::vector<int>& widths,
                                     int filters_per_width, Rng& rng) {
  if (widths.empty()) throw std::invalid_argument("pooler needs at least one width");
  for (int w : widths) {
    if (w < 1) throw std::invalid_argument("filter widths must be >= 1");
    const std::string name = prefix + "/width" + std::to_string(w);
    Bank bank{&store.Create(name + "/filters", {w, input_dim, filters_per_width}),
              &store.Create(name + "/bias", {filters_per_width})};
    InitGlorotUniform(*bank.filters, w * input_dim, filters_per_width, rng);
    banks_.push_back(bank);
    output_dim_ += filters_per_width;
  }
}

Var ParallelCnnPooler::Pool(Tape& tape, Var seq) const {
  std::vector<Var> pooled;
  pooled.reserve(banks_.size());
  for (const Bank& b : banks_) {
    Var conv = Conv1dSame(tape, seq, tape.Parameter(*b.filters), tape.Parameter(*b.bias));
    pooled.push_back(MaxOverTime(tape, Relu(tape, conv)));
  }
  return pooled.size() == 1 ? pooled[0] : Concat(tape, pooled);
}

Projection::Projection(ParameterStore& store, const std::string& prefix, int input_dim,
                       int output_dim, Rng& rng) {
  weights_ = &store.Create(prefix + "/weights", {input_dim, output_dim});
  bias_ = &store.Create(prefix + "/bias", {output_dim});
  InitGlorotUniform(*weights_, input_dim, output_dim, rng);
}

Var Projection::Apply(Tape& tape, Var x) const {
  return AddBias(tape, MatMul(tape, x, tape.Parameter(*weights_)),
                 tape.Parameter(*bias_));
}

int ArgMax(const Tensor& scores) {
  auto v = scores.values();
  int best = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = static_cast<int>(i);
  }
  return best;
}

}  // namespace spanfeat
