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

#ifndef SPANFEAT_EVAL_REPORT_H_
#define SPANFEAT_EVAL_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spanfeat/eval/metrics.h"

namespace spanfeat {

struct FeatureSection {
  FeatureScores scores;
  // Tagger-based models only: exact-span scores of the raw feature spans and
  // the fraction of intent spans no feature span matches exactly.
  std::optional<Prf> feature_spans;
  std::optional<double> boundary_disagreement;
};

struct EvalReport {
  std::string model;   // architecture tag, plus ablation suffix
  std::string corpus;
  std::string span_mode = "gold";  // "gold" or "pipeline"
  std::optional<Prf> intent_spans;  // intent tagger only
  std::vector<FeatureSection> features;

  const FeatureSection* Find(Dimension d) const;
};

// Folds `other`'s feature sections (and intent scores, if absent) into
// `into`. Throws std::invalid_argument when a dimension appears twice.
void MergeReport(EvalReport& into, const EvalReport& other);

nlohmann::ordered_json ReportToJson(const EvalReport& report);
EvalReport ReportFromJson(const nlohmann::json& j);

// Rows are dimensions, columns are models, cells are micro-F1 x 100 with two
// decimals; "-" where a model has no score for the dimension.
std::string FormatFeatureTable(const std::vector<EvalReport>& reports);

// Per-label breakdown of one report.
std::string FormatReport(const EvalReport& report);

}  // namespace spanfeat

#endif  // SPANFEAT_EVAL_REPORT_H_
