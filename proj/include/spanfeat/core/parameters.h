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

#ifndef SPANFEAT_CORE_PARAMETERS_H_
#define SPANFEAT_CORE_PARAMETERS_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spanfeat/core/tensor.h"

namespace spanfeat {

using Rng = std::mt19937_64;

// Named, insertion-ordered collection of trainable tensors. Tensors live on
// the heap so references handed out stay valid when the store is moved.
class ParameterStore {
 public:
  ParameterStore() = default;
  ParameterStore(ParameterStore&&) = default;
  ParameterStore& operator=(ParameterStore&&) = default;

  Tensor& Create(const std::string& name, std::vector<int> shape);
  Tensor* Find(const std::string& name);
  const Tensor* Find(const std::string& name) const;
  Tensor& Get(const std::string& name);

  size_t size() const { return entries_.size(); }
  const std::string& name(size_t i) const { return entries_[i].first; }
  Tensor& tensor(size_t i) { return *entries_[i].second; }
  const Tensor& tensor(size_t i) const { return *entries_[i].second; }

  size_t NumValues() const;
  void ZeroGrad();

  std::vector<std::vector<double>> Snapshot() const;
  void Restore(const std::vector<std::vector<double>>& snapshot);

 private:
  std::vector<std::pair<std::string, std::unique_ptr<Tensor>>> entries_;
};

// Uniform in +-sqrt(6 / (fan_in + fan_out)).
void InitGlorotUniform(Tensor& t, int fan_in, int fan_out, Rng& rng);
void InitUniform(Tensor& t, double limit, Rng& rng);

}  // namespace spanfeat

#endif  // SPANFEAT_CORE_PARAMETERS_H_
