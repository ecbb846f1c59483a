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

#ifndef SPANFEAT_MODELS_POOLING_H_
#define SPANFEAT_MODELS_POOLING_H_

#include <string>
#include <vector>

#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"

namespace spanfeat {

// Parallel convolutions of several widths, each followed by ReLU and
// max-over-time; the pooled vectors are concatenated in width order.
class ParallelCnnPooler {
 public:
  ParallelCnnPooler(ParameterStore& store, const std::string& prefix, int input_dim,
                    const std::vector<int>& widths, int filters_per_width, Rng& rng);

  // [n x input_dim] -> [widths * filters_per_width]
  Var Pool(Tape& tape, Var seq) const;
  int output_dim() const { return output_dim_; }

 private:
  struct Bank {
    Tensor* filters;
    Tensor* bias;
  };
  std::vector<Bank> banks_;
  int output_dim_ = 0;
};

// Affine map to label scores.
class Projection {
 public:
  Projection(ParameterStore& store, const std::string& prefix, int input_dim,
             int output_dim, Rng& rng);

  Var Apply(Tape& tape, Var x) const;

 private:
  Tensor* weights_;
  Tensor* bias_;
};

// Lowest index among maximal entries.
int ArgMax(const Tensor& scores);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_POOLING_H_
