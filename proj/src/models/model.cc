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

#include "spanfeat/models/model.h"

#include <array>
#include <stdexcept>

namespace spanfeat {
namespace {

constexpr std::array<std::string_view, 5> kTags = {
    "intent-tagger", "feature-tagger-flat", "feature-tagger-cascaded",
    "span-cnn",      "global-local",
};

}  // namespace

std::string_view ArchitectureTag(Architecture a) {
  return kTags[static_cast<int>(a)];
}

Architecture ParseArchitecture(std::string_view tag) {
  for (size_t i = 0; i < kTags.size(); ++i) {
    if (kTags[i] == tag) return static_cast<Architecture>(i);
  }
  throw std::invalid_argument("unknown architecture tag: " + std::string(tag));
}

void Model::RequireTrained() const {
  if (!trained_) {
    throw std::logic_error(std::string(ArchitectureTag(architecture())) +
                           " model is untrained");
  }
}

}  // namespace spanfeat
