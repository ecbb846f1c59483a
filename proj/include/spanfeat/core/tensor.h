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

#ifndef SPANFEAT_CORE_TENSOR_H_
#define SPANFEAT_CORE_TENSOR_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanfeat {

// Raised when operand shapes are incompatible.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major array of doubles with a gradient buffer of the same size.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, std::vector<double> values);

  static Tensor Vector(std::vector<double> values);
  static Tensor Matrix(int rows, int cols, std::vector<double> values);
  static Tensor Scalar(double value);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int axis) const { return shape_.at(axis); }
  size_t size() const { return values_.size(); }

  // Number of rows when viewed as a matrix whose last axis is the feature
  // axis. A vector is one row.
  int rows() const;
  int cols() const { return shape_.empty() ? 0 : shape_.back(); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::span<double> grad() { return grad_; }
  std::span<const double> grad() const { return grad_; }

  double& operator[](size_t i) { return values_[i]; }
  double operator[](size_t i) const { return values_[i]; }
  double& at(int r, int c) { return values_[static_cast<size_t>(r) * cols() + c]; }
  double at(int r, int c) const {
    return values_[static_cast<size_t>(r) * cols() + c];
  }
  std::span<double> row(int r) {
    return {values_.data() + static_cast<size_t>(r) * cols(),
            static_cast<size_t>(cols())};
  }
  std::span<const double> row(int r) const {
    return {values_.data() + static_cast<size_t>(r) * cols(),
            static_cast<size_t>(cols())};
  }
  std::span<double> grad_row(int r) {
    return {grad_.data() + static_cast<size_t>(r) * cols(),
            static_cast<size_t>(cols())};
  }

  double scalar() const;

  void ZeroGrad();
  void Fill(double value);

  std::string ShapeString() const;

 private:
  std::vector<int> shape_;
  std::vector<double> values_;
  std::vector<double> grad_;
};

std::string ShapeToString(const std::vector<int>& shape);

}  // namespace spanfeat

#endif  // SPANFEAT_CORE_TENSOR_H_
