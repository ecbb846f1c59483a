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

#include "spanfeat/data/features.h"

#include <stdexcept>

namespace spanfeat {
namespace {

constexpr std::array<std::string_view, kNumDimensions> kNames = {
    "attr_cf", "attr_ev", "communicative_function", "modality", "negation", "tense",
};

const std::array<std::vector<std::string>, kNumDimensions>& LabelTable() {
  static const std::array<std::vector<std::string>, kNumDimensions> table = {{
      {"self", "other"},
      {"self", "other"},
      {"inform", "issue", "request-action", "request-confirm", "request-info"},
      {"modal-poss", "modal-try", "other"},
      {"positive", "negative"},
      {"past", "present", "future"},
  }};
  return table;
}

}  // namespace

std::string_view DimensionName(Dimension d) { return kNames[DimensionIndex(d)]; }

Dimension ParseDimension(std::string_view name) {
  for (Dimension d : kAllDimensions) {
    if (DimensionName(d) == name) return d;
  }
  throw std::invalid_argument("unknown feature dimension: " + std::string(name));
}

const std::vector<std::string>& DimensionLabels(Dimension d) {
  return LabelTable()[DimensionIndex(d)];
}

int FindLabel(Dimension d, std::string_view label) {
  const auto& labels = DimensionLabels(d);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

const std::string& DefaultLabel(Dimension d) {
  static const std::array<std::string, kNumDimensions> defaults = {
      "self", "self", "inform", "other", "positive", "present",
  };
  return defaults[DimensionIndex(d)];
}

}  // namespace spanfeat
