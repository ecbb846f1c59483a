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

#ifndef SPANFEAT_DATA_UTTERANCE_H_
#define SPANFEAT_DATA_UTTERANCE_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanfeat/data/features.h"

namespace spanfeat {

// Violated utterance, span or example invariant.
class DataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Half-open token range [start, end) with one label. This is what taggers
// emit: an intent label for the intent tagger, a feature label for feature
// taggers.
struct LabeledSpan {
  int start = 0;
  int end = 0;
  std::string label;

  int length() const { return end - start; }
  bool operator==(const LabeledSpan&) const = default;
};

using FeatureLabels = std::array<std::string, kNumDimensions>;

struct IntentSpan {
  int start = 0;
  int end = 0;
  std::string intent;
  FeatureLabels features;  // indexed by DimensionIndex()

  const std::string& feature(Dimension d) const {
    return features[DimensionIndex(d)];
  }
  std::string& feature(Dimension d) { return features[DimensionIndex(d)]; }
  bool operator==(const IntentSpan&) const = default;
};

struct AnnotatedUtterance {
  std::vector<std::string> tokens;
  std::vector<IntentSpan> spans;

  bool operator==(const AnnotatedUtterance&) const = default;
};

using Corpus = std::vector<AnnotatedUtterance>;

// Checks: non-empty tokens; 0 <= start < end <= n; spans sorted and
// non-overlapping; non-empty intent; every feature a member of its
// dimension's label set.
void ValidateUtterance(const AnnotatedUtterance& utterance);

// Checks range, ordering and overlap only.
void ValidateSpans(const std::vector<LabeledSpan>& spans, int num_tokens);

// Classifier input: the whole utterance plus a membership mask for the
// span being classified. The mask need not be contiguous.
struct MaskedExample {
  std::vector<std::string> tokens;
  std::vector<std::uint8_t> mask;
  int gold = -1;

  // Indices of set mask bits in increasing order.
  std::vector<int> SpanPositions() const;
  // Tokens under the mask, in utterance order.
  std::vector<std::string> SpanTokens() const;
  void Validate() const;
};

MaskedExample MakeMaskedExample(const AnnotatedUtterance& utterance,
                                const IntentSpan& span, Dimension dimension);

// One example per intent span.
std::vector<MaskedExample> MakeMaskedExamples(const Corpus& corpus,
                                              Dimension dimension);

std::vector<LabeledSpan> IntentLabels(const AnnotatedUtterance& utterance);
std::vector<LabeledSpan> FeatureSpans(const AnnotatedUtterance& utterance,
                                      Dimension dimension);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_UTTERANCE_H_
