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

#ifndef SPANFEAT_VERIFY_GRAD_SUITE_H_
#define SPANFEAT_VERIFY_GRAD_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace spanfeat {

inline constexpr double kPrimitiveGradTolerance = 1e-5;
inline constexpr double kModelGradTolerance = 1e-4;

struct GradCheckResult {
  std::string name;
  bool end_to_end = false;  // full model loss rather than one primitive
  double max_relative_error = 0;
  double tolerance = 0;

  bool pass() const { return max_relative_error < tolerance; }
};

// Finite-difference checks of every differentiable primitive and of the
// training loss of each architecture (plus the Global-Local ablations) on
// toy configurations: at most 6 tokens, LSTM hidden size 4.
std::vector<GradCheckResult> RunGradSuite(std::uint64_t seed = 1);

std::string FormatGradSuite(const std::vector<GradCheckResult>& results);

}  // namespace spanfeat

#endif  // SPANFEAT_VERIFY_GRAD_SUITE_H_
