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

#ifndef SPANFEAT_MODELS_SEQUENCE_TAGGER_H_
#define SPANFEAT_MODELS_SEQUENCE_TAGGER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanfeat/crf/tag_set.h"
#include "spanfeat/data/features.h"
#include "spanfeat/data/utterance.h"
#include "spanfeat/encoders/encoders.h"
#include "spanfeat/models/model.h"

namespace spanfeat {

struct TaggerConfig {
  EncoderConfig encoder;
  // Width of the inside/outside boundary embedding used by the cascaded
  // feature tagger.
  int boundary_dim = 10;
  // Restrict the CRF partition function to IOBES-legal paths during
  // training. Decoding is always constrained.
  bool constrain_training = false;

  void Validate() const;
};

// Boundary ids fed to the cascaded tagger. Intent labels are not visible.
inline constexpr int kBoundaryOutside = 0;
inline constexpr int kBoundaryInside = 1;

std::vector<int> BoundaryIds(const std::vector<LabeledSpan>& spans, int num_tokens);

struct TaggingExample {
  std::vector<std::string> tokens;
  std::vector<int> boundaries;  // empty unless the tagger is cascaded
  std::vector<int> gold;        // tag indices
};

// BiLSTM-CRF: token encoder (optionally with boundary embeddings), BiLSTM,
// projection to IOBES tag scores, linear-chain CRF with constrained
// decoding. Serves as intent tagger and as flat or cascaded feature tagger.
class SequenceTagger : public Model {
 public:
  // `dimension` is required for the feature roles and must be empty for
  // the intent tagger. `labels` is the intent inventory or the dimension's
  // label set.
  SequenceTagger(Architecture role, std::optional<Dimension> dimension,
                 std::vector<std::string> labels, const TaggerConfig& config,
                 Vocabulary words, Vocabulary chars, std::uint64_t seed);

  Architecture architecture() const override { return role_; }
  bool cascaded() const { return role_ == Architecture::kFeatureTaggerCascaded; }
  const std::optional<Dimension>& dimension() const { return dimension_; }
  const TaggerConfig& config() const { return config_; }
  const TagSet& tag_set() const { return tags_; }
  const ConstraintMask& constraints() const { return constraints_; }
  const TokenEncoder& encoder() const { return encoder_; }
  std::uint64_t seed() const { return seed_; }

  // [n x num_tags]. `boundaries` must be given iff the tagger is cascaded.
  Var Emissions(Tape& tape, const std::vector<std::string>& tokens,
                std::span<const int> boundaries) const;

  Var Loss(Tape& tape, const TaggingExample& example) const;

  // Constrained Viterbi path as tag indices.
  std::vector<int> DecodeIndices(const std::vector<std::string>& tokens,
                                 std::span<const int> boundaries) const;
  TagSequence Decode(const std::vector<std::string>& tokens,
                     std::span<const int> boundaries) const;
  std::vector<LabeledSpan> Tag(const std::vector<std::string>& tokens,
                               std::span<const int> boundaries) const;

  // Gold tag indices for `spans` labelled in this tagger's label space.
  TaggingExample MakeExample(const std::vector<std::string>& tokens,
                             const std::vector<LabeledSpan>& gold_spans,
                             const std::vector<LabeledSpan>& boundary_spans) const;

 private:
  Architecture role_;
  std::optional<Dimension> dimension_;
  TaggerConfig config_;
  std::uint64_t seed_;
  TagSet tags_;
  ConstraintMask constraints_;
  Rng init_rng_;
  TokenEncoder encoder_;
  Tensor* boundary_embeddings_ = nullptr;
  BiLstm bilstm_;
  Tensor* projection_;
  Tensor* projection_bias_;
  Tensor* transitions_;
};

// Intent spans (intent labels only) predicted by an intent tagger.
std::vector<LabeledSpan> TagIntents(const std::vector<std::string>& tokens,
                                    const SequenceTagger& tagger);

// Feature spans for one dimension from a flat feature tagger. Boundaries
// need not agree with the intent spans.
std::vector<LabeledSpan> TagFeaturesFlat(const std::vector<std::string>& tokens,
                                         const SequenceTagger& tagger);

// One label per supplied intent span from a cascaded feature tagger. Only
// the span boundaries reach the model, never the intent labels.
std::vector<std::string> TagFeaturesCascaded(const std::vector<std::string>& tokens,
                                             const std::vector<LabeledSpan>& intent_spans,
                                             const SequenceTagger& tagger);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_SEQUENCE_TAGGER_H_
