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

#include "spanfeat/core/tape.h"

#include <stdexcept>

namespace spanfeat {

Var Tape::Constant(Tensor value) {
  owned_.push_back(std::move(value));
  return Var(&owned_.back());
}

Var Tape::Allocate(std::vector<int> shape) {
  owned_.emplace_back(std::move(shape));
  return Var(&owned_.back());
}

void Tape::Record(std::function<void()> backward) {
  if (record_) backward_.push_back(std::move(backward));
}

void Tape::Backward(Var loss, double seed) {
  if (!record_) throw std::logic_error("Backward() on a non-recording tape");
  if (loss.size() != 1) {
    throw ShapeError("Backward() needs a scalar loss, got " +
                     loss.tensor().ShapeString());
  }
  loss.tensor().grad()[0] += seed;
  for (auto it = backward_.rbegin(); it != backward_.rend(); ++it) (*it)();
}

}  // namespace spanfeat
