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

#ifndef SPANFEAT_MODELS_MODEL_H_
#define SPANFEAT_MODELS_MODEL_H_

#include <string>
#include <string_view>

#include "spanfeat/core/parameters.h"

namespace spanfeat {

enum class Architecture {
  kIntentTagger,
  kFeatureTaggerFlat,
  kFeatureTaggerCascaded,
  kSpanCnn,
  kGlobalLocal,
};

// "intent-tagger", "feature-tagger-flat", "feature-tagger-cascaded",
// "span-cnn", "global-local".
std::string_view ArchitectureTag(Architecture a);
Architecture ParseArchitecture(std::string_view tag);

// Base of all trainable models. Owns the parameters; movable, not copyable.
class Model {
 public:
  virtual ~Model() = default;
  Model() = default;
  Model(Model&&) = default;
  Model& operator=(Model&&) = default;

  virtual Architecture architecture() const = 0;

  ParameterStore& params() { return params_; }
  const ParameterStore& params() const { return params_; }

  bool trained() const { return trained_; }
  void MarkTrained() { trained_ = true; }

 protected:
  // Throws std::logic_error when the model was never trained or loaded.
  void RequireTrained() const;

  ParameterStore params_;

 private:
  bool trained_ = false;
};

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_MODEL_H_
