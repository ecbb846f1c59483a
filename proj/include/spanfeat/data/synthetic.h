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

#ifndef SPANFEAT_DATA_SYNTHETIC_H_
#define SPANFEAT_DATA_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spanfeat/data/features.h"
#include "spanfeat/data/utterance.h"

namespace spanfeat {

// Template table for the synthetic task.
//
// Every utterance draws one label per feature dimension, shared by all of
// its intent spans. For each span and dimension, the label's cue word is
// placed inside the span with probability rho; otherwise the span carries
// no cue for that dimension. When no span of an utterance carries the cue,
// it is placed in a context prefix terminated by `context_separator`, which
// lies outside every span. A model that sees only the span therefore cannot
// recover the label when the cue is elsewhere, while a model that sees the
// whole utterance always can.
//
// Span layout: cue words in `cue_slot_order`, then intent head, determiner
// and one or more filler words. Fillers are pseudo-words drawn from pools
// that are disjoint across train/dev/test.
struct SyntheticLexicon {
  // cues[dimension][label index] -> interchangeable cue words.
  std::array<std::vector<std::vector<std::string>>, kNumDimensions> cues;
  std::vector<std::string> intents;
  std::vector<std::vector<std::string>> intent_heads;
  std::vector<std::string> determiners;
  std::vector<std::string> connectives;
  std::string context_separator;
  std::array<Dimension, kNumDimensions> cue_slot_order;
};

const SyntheticLexicon& DefaultLexicon();

std::array<std::vector<double>, kNumDimensions> DefaultLabelPriors();

struct SyntheticConfig {
  int train_size = 2000;
  int dev_size = 500;
  int test_size = 500;
  std::uint64_t seed = 7;
  // Probability that a span carries its own cue, per dimension.
  std::array<double, kNumDimensions> rho = {0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  std::array<std::vector<double>, kNumDimensions> priors = DefaultLabelPriors();
  int fillers_per_split = 60;
  int max_spans = 3;
  int max_fillers_per_span = 2;

  void Validate() const;
};

struct SyntheticCorpora {
  Corpus train;
  Corpus dev;
  Corpus test;
};

SyntheticCorpora GenerateSynthetic(const SyntheticConfig& config);

// Filler pools for train, dev and test, in that order.
std::array<std::vector<std::string>, 3> SyntheticFillerPools(
    const SyntheticConfig& config);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_SYNTHETIC_H_
