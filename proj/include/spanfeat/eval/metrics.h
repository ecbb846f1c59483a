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

#ifndef SPANFEAT_EVAL_METRICS_H_
#define SPANFEAT_EVAL_METRICS_H_

#include <string>
#include <vector>

#include "spanfeat/data/features.h"
#include "spanfeat/data/utterance.h"

namespace spanfeat {

// Precision, recall and F1 from raw counts. A zero denominator yields 0 and
// sets the matching *_undefined flag.
struct Prf {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  bool precision_undefined = false;
  bool recall_undefined = false;
};

Prf MakePrf(int tp, int fp, int fn);

// Exact (start, end, label) matching.
Prf SpanF1(const std::vector<LabeledSpan>& pred, const std::vector<LabeledSpan>& gold);
// Counts pooled over utterances.
Prf SpanF1(const std::vector<std::vector<LabeledSpan>>& pred,
           const std::vector<std::vector<LabeledSpan>>& gold);

struct LabelScore {
  std::string label;
  int support = 0;  // gold count
  Prf prf;
};

struct FeatureScores {
  Dimension dimension = Dimension::kTense;
  int count = 0;
  double accuracy = 0;
  std::vector<LabelScore> per_label;  // the dimension's full label set, in order
  Prf micro;
  // Mean F1 over labels that occur in gold or predictions.
  double macro_f1 = 0;
  std::vector<std::string> macro_labels;
};

// One-vs-rest scoring of aligned per-span labels. Throws DataError on a
// length mismatch or a label outside the dimension.
FeatureScores FeatureF1(const std::vector<std::string>& pred,
                        const std::vector<std::string>& gold, Dimension dimension);

}  // namespace spanfeat

#endif  // SPANFEAT_EVAL_METRICS_H_
