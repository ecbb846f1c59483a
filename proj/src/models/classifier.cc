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

#include "spanfeat/models/classifier.h"

#include <algorithm>

#include "spanfeat/core/ops.h"
#include "spanfeat/models/pooling.h"

namespace spanfeat {

SpanClassifier::SpanClassifier(Dimension dimension, Vocabulary words, std::uint64_t seed)
    : init_rng_(seed), dimension_(dimension), words_(std::move(words)), seed_(seed) {}

Var SpanClassifier::Loss(Tape& tape, const MaskedExample& example) const {
  if (example.gold < 0 || example.gold >= num_labels()) {
    throw DataError("gold label index out of range");
  }
  return SoftmaxCrossEntropy(tape, Logits(tape, example.tokens, example.mask),
                             example.gold);
}

int SpanClassifier::PredictIndex(const std::vector<std::string>& tokens,
                                 std::span<const std::uint8_t> mask) const {
  Tape tape(/*record=*/false);
  return ArgMax(Logits(tape, tokens, mask).tensor());
}

std::vector<int> SpanClassifier::WordIds(const std::vector<std::string>& tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(words_.Lookup(Lowercase(t)));
  return ids;
}

void CheckMask(const std::vector<std::string>& tokens, std::span<const std::uint8_t> mask) {
  if (tokens.empty()) throw DataError("empty utterance");
  if (mask.size() != tokens.size()) {
    throw DataError("mask length " + std::to_string(mask.size()) + " != token count " +
                    std::to_string(tokens.size()));
  }
  if (std::none_of(mask.begin(), mask.end(), [](std::uint8_t b) { return b != 0; })) {
    throw DataError("empty mask");
  }
}

}  // namespace spanfeat
