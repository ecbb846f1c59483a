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

#ifndef SPANFEAT_EVAL_COMPARE_H_
#define SPANFEAT_EVAL_COMPARE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "spanfeat/eval/report.h"

namespace spanfeat {

// Report names compare_models looks for.
inline constexpr const char* kGlobalLocalName = "global-local";
inline constexpr const char* kSpanCnnName = "span-cnn";
inline constexpr const char* kNoGlobalName = "global-local-no-global";
inline constexpr const char* kNoSharedName = "global-local-no-shared";

// Required micro-F1 lead of Global-Local over span-CNN and over the
// no-global ablation, and the slack allowed for the no-shared ablation.
inline constexpr double kOrderingMargin = 0.05;
inline constexpr double kNoSharedTolerance = 0.02;

struct ComparisonRow {
  Dimension dimension = Dimension::kTense;
  double global_local = 0;
  double span_cnn = 0;
  double no_global = 0;
  double no_shared = 0;
  // global_local minus the other model.
  double delta_span_cnn = 0;
  double delta_no_global = 0;
  double delta_no_shared = 0;
  bool beats_span_cnn = false;
  bool beats_no_global = false;
  bool no_shared_ok = false;

  bool pass() const { return beats_span_cnn && beats_no_global && no_shared_ok; }
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  bool pass() const;
  std::string ToText() const;
  nlohmann::ordered_json ToJson() const;
};

// Groups `reports` by model name (merging dimensions) and compares the
// four models above on every dimension Global-Local covers. Throws
// std::invalid_argument naming the first missing model or dimension.
Comparison CompareModels(const std::vector<EvalReport>& reports);

}  // namespace spanfeat

#endif  // SPANFEAT_EVAL_COMPARE_H_
