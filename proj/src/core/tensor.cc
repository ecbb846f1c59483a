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

#include "spanfeat/core/tensor.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spanfeat {
namespace {

size_t CheckedProduct(const std::vector<int>& shape) {
  if (shape.empty()) throw ShapeError("tensor shape must have at least one axis");
  size_t n = 1;
  for (int d : shape) {
    if (d < 1) {
      throw ShapeError("tensor dimensions must be positive, got " +
                       ShapeToString(shape));
    }
    n *= static_cast<size_t>(d);
  }
  return n;
}

}  // namespace

std::string ShapeToString(const std::vector<int>& shape) {
  std::string out = "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += "x";
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  size_t n = CheckedProduct(shape_);
  values_.assign(n, 0.0);
  grad_.assign(n, 0.0);
}

Tensor::Tensor(std::vector<int> shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  size_t n = CheckedProduct(shape_);
  if (n != values_.size()) {
    throw ShapeError("shape " + ShapeToString(shape_) + " needs " +
                     std::to_string(n) + " values, got " +
                     std::to_string(values_.size()));
  }
  grad_.assign(n, 0.0);
}

Tensor Tensor::Vector(std::vector<double> values) {
  int n = static_cast<int>(values.size());
  return Tensor({n}, std::move(values));
}

Tensor Tensor::Matrix(int rows, int cols, std::vector<double> values) {
  return Tensor({rows, cols}, std::move(values));
}

Tensor Tensor::Scalar(double value) { return Tensor({1}, {value}); }

int Tensor::rows() const {
  if (shape_.empty()) return 0;
  int r = 1;
  for (size_t i = 0; i + 1 < shape_.size(); ++i) r *= shape_[i];
  return r;
}

double Tensor::scalar() const {
  if (values_.size() != 1) {
    throw ShapeError("expected a scalar, got shape " + ShapeString());
  }
  return values_[0];
}

void Tensor::ZeroGrad() { std::fill(grad_.begin(), grad_.end(), 0.0); }

void Tensor::Fill(double value) {
  std::fill(values_.begin(), values_.end(), value);
}

std::string Tensor::ShapeString() const { return ShapeToString(shape_); }

}  // namespace spanfeat
