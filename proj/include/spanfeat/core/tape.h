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

#ifndef SPANFEAT_CORE_TAPE_H_
#define SPANFEAT_CORE_TAPE_H_

#include <deque>
#include <functional>
#include <vector>

#include "spanfeat/core/tensor.h"

namespace spanfeat {

// Handle to a tensor participating in a computation. Either a parameter
// owned elsewhere or an intermediate owned by the tape.
class Var {
 public:
  Var() = default;
  explicit Var(Tensor* tensor) : tensor_(tensor) {}

  Tensor& tensor() const { return *tensor_; }
  const std::vector<int>& shape() const { return tensor_->shape(); }
  size_t size() const { return tensor_->size(); }
  int rows() const { return tensor_->rows(); }
  int cols() const { return tensor_->cols(); }
  double scalar() const { return tensor_->scalar(); }
  bool valid() const { return tensor_ != nullptr; }

 private:
  Tensor* tensor_ = nullptr;
};

// Records executed primitives so that Backward() can replay their gradient
// rules in exact reverse order. Gradients always accumulate. A tape built
// with recording disabled only computes forward values.
class Tape {
 public:
  explicit Tape(bool record = true) : record_(record) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool recording() const { return record_; }

  // A leaf whose gradient accumulates into `parameter` itself.
  Var Parameter(Tensor& parameter) { return Var(&parameter); }

  // A leaf owned by the tape. Its gradient is computed but discarded.
  Var Constant(Tensor value);

  // Fresh zero-filled intermediate owned by the tape.
  Var Allocate(std::vector<int> shape);

  void Record(std::function<void()> backward);

  // Seeds d(loss)/d(loss) = seed and runs the recorded rules in reverse.
  void Backward(Var loss, double seed = 1.0);

  size_t num_nodes() const { return backward_.size(); }

 private:
  bool record_;
  std::deque<Tensor> owned_;
  std::vector<std::function<void()>> backward_;
};

}  // namespace spanfeat

#endif  // SPANFEAT_CORE_TAPE_H_
