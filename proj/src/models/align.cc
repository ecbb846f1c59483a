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

#include "spanfeat/models/align.h"

#include <algorithm>
#include <stdexcept>

namespace spanfeat {

std::vector<std::string> AlignFeatureSpans(const std::vector<LabeledSpan>& intent_spans,
                                           const std::vector<LabeledSpan>& feature_spans,
                                           Dimension dimension) {
  std::vector<std::string> labels;
  labels.reserve(intent_spans.size());
  for (const LabeledSpan& intent : intent_spans) {
    int best_overlap = 0;
    const LabeledSpan* best = nullptr;
    for (const LabeledSpan& feature : feature_spans) {
      const int overlap = std::min(intent.end, feature.end) -
                          std::max(intent.start, feature.start);
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = &feature;
      }
    }
    labels.push_back(best != nullptr ? best->label : DefaultLabel(dimension));
  }
  return labels;
}

double BoundaryDisagreementRate(const std::vector<std::vector<LabeledSpan>>& intent_spans,
                                const std::vector<std::vector<LabeledSpan>>& feature_spans) {
  if (intent_spans.size() != feature_spans.size()) {
    throw std::invalid_argument("boundary disagreement: utterance counts differ");
  }
  int total = 0;
  int mismatched = 0;
  for (size_t u = 0; u < intent_spans.size(); ++u) {
    for (const LabeledSpan& intent : intent_spans[u]) {
      ++total;
      const bool matched = std::any_of(
          feature_spans[u].begin(), feature_spans[u].end(), [&](const LabeledSpan& f) {
            return f.start == intent.start && f.end == intent.end;
          });
      if (!matched) ++mismatched;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(mismatched) / total;
}

}  // namespace spanfeat
