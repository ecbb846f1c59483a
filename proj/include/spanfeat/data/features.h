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

#ifndef SPANFEAT_DATA_FEATURES_H_
#define SPANFEAT_DATA_FEATURES_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace spanfeat {

// The six intent-feature dimensions, in serialization order.
enum class Dimension {
  kAttrCf = 0,
  kAttrEv,
  kCommunicativeFunction,
  kModality,
  kNegation,
  kTense,
};

inline constexpr int kNumDimensions = 6;

inline constexpr std::array<Dimension, kNumDimensions> kAllDimensions = {
    Dimension::kAttrCf,   Dimension::kAttrEv,   Dimension::kCommunicativeFunction,
    Dimension::kModality, Dimension::kNegation, Dimension::kTense,
};

inline int DimensionIndex(Dimension d) { return static_cast<int>(d); }

// Snake-case name used in corpus files, e.g. "communicative_function".
std::string_view DimensionName(Dimension d);

// Accepts the snake-case name; throws std::invalid_argument otherwise.
Dimension ParseDimension(std::string_view name);

// Closed, ordered label set of a dimension.
const std::vector<std::string>& DimensionLabels(Dimension d);

// Label index within DimensionLabels(d), or -1 when absent.
int FindLabel(Dimension d, std::string_view label);

// Label assumed when no prediction covers an intent span.
const std::string& DefaultLabel(Dimension d);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_FEATURES_H_
