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

#ifndef SPANFEAT_CORE_GRAD_CHECK_H_
#define SPANFEAT_CORE_GRAD_CHECK_H_

#include <functional>
#include <span>

#include "spanfeat/core/tape.h"

namespace spanfeat {

// Builds a scalar on the given tape. Inputs under test must enter through
// tape.Parameter() so their gradients accumulate in place.
using ScalarFunction = std::function<Var(Tape&)>;

inline constexpr double kDefaultGradCheckEpsilon = 1e-5;

// Compares tape gradients with central differences for every element of
// every input. Returns max |analytic - numeric| / max(|analytic|, |numeric|,
// 1e-8). Throws ShapeError when the function is not scalar-valued.
// Central-difference check of d(function)/d(inputs). Returns the largest
// per-tensor relative error ||analytic - numeric|| / max(||analytic||,
// ||numeric||, 1e-8). Input gradients are left zeroed.
double GradCheck(const ScalarFunction& function, std::span<Tensor* const> inputs,
                 double epsilon = kDefaultGradCheckEpsilon);

}  // namespace spanfeat

#endif  // SPANFEAT_CORE_GRAD_CHECK_H_
