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

#ifndef SPANFEAT_MODELS_ALIGN_H_
#define SPANFEAT_MODELS_ALIGN_H_

#include <string>
#include <vector>

#include "spanfeat/data/features.h"
#include "spanfeat/data/utterance.h"

namespace spanfeat {

// Merges feature-tagger output onto intent spans: each intent span takes the
// label of the feature span with the largest token overlap (earlier span on
// ties), or DefaultLabel(dimension) when nothing overlaps.
std::vector<std::string> AlignFeatureSpans(const std::vector<LabeledSpan>& intent_spans,
                                           const std::vector<LabeledSpan>& feature_spans,
                                           Dimension dimension);

// Fraction of intent spans whose exact boundaries no feature span matches.
// Zero when there are no intent spans.
double BoundaryDisagreementRate(const std::vector<std::vector<LabeledSpan>>& intent_spans,
                                const std::vector<std::vector<LabeledSpan>>& feature_spans);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_ALIGN_H_
