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

#ifndef SPANFEAT_MODELS_CLASSIFIER_H_
#define SPANFEAT_MODELS_CLASSIFIER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spanfeat/core/tape.h"
#include "spanfeat/data/features.h"
#include "spanfeat/data/utterance.h"
#include "spanfeat/data/vocabulary.h"
#include "spanfeat/models/model.h"

namespace spanfeat {

// A per-dimension classifier over one (possibly non-contiguous) span of an
// utterance.
class SpanClassifier : public Model {
 public:
  SpanClassifier(Dimension dimension, Vocabulary words, std::uint64_t seed);

  Dimension dimension() const { return dimension_; }
  const std::vector<std::string>& labels() const { return DimensionLabels(dimension_); }
  int num_labels() const { return static_cast<int>(labels().size()); }
  const Vocabulary& words() const { return words_; }
  std::uint64_t seed() const { return seed_; }

  // Unnormalized label scores. Throws DataError on an empty or misaligned
  // mask.
  virtual Var Logits(Tape& tape, const std::vector<std::string>& tokens,
                     std::span<const std::uint8_t> mask) const = 0;

  Var Loss(Tape& tape, const MaskedExample& example) const;
  // Label index; ties go to the lowest index.
  int PredictIndex(const std::vector<std::string>& tokens,
                   std::span<const std::uint8_t> mask) const;

 protected:
  std::vector<int> WordIds(const std::vector<std::string>& tokens) const;

  Rng init_rng_;

 private:
  Dimension dimension_;
  Vocabulary words_;
  std::uint64_t seed_;
};

// Throws DataError unless the mask matches the tokens and has a set bit.
void CheckMask(const std::vector<std::string>& tokens, std::span<const std::uint8_t> mask);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_CLASSIFIER_H_
