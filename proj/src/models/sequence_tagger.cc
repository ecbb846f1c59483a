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

#include "spanfeat/models/sequence_tagger.h"

#include <stdexcept>

#include "spanfeat/core/ops.h"
#include "spanfeat/crf/crf.h"
#include "spanfeat/models/align.h"

namespace spanfeat {
namespace {

int InputDim(const TaggerConfig& config, Architecture role) {
  int dim = config.encoder.TokenDim();
  if (role == Architecture::kFeatureTaggerCascaded) dim += config.boundary_dim;
  return dim;
}

Architecture CheckRole(Architecture role, const std::optional<Dimension>& dimension) {
  switch (role) {
    case Architecture::kIntentTagger:
      if (dimension) throw std::invalid_argument("intent tagger takes no dimension");
      return role;
    case Architecture::kFeatureTaggerFlat:
    case Architecture::kFeatureTaggerCascaded:
      if (!dimension) throw std::invalid_argument("feature tagger needs a dimension");
      return role;
    default:
      throw std::invalid_argument("not a tagger architecture: " +
                                  std::string(ArchitectureTag(role)));
  }
}

}  // namespace

void TaggerConfig::Validate() const {
  encoder.Validate();
  if (boundary_dim < 1) throw std::invalid_argument("boundary_dim must be >= 1");
}

std::vector<int> BoundaryIds(const std::vector<LabeledSpan>& spans, int num_tokens) {
  ValidateSpans(spans, num_tokens);
  std::vector<int> ids(num_tokens, kBoundaryOutside);
  for (const auto& s : spans) {
    for (int i = s.start; i < s.end; ++i) ids[i] = kBoundaryInside;
  }
  return ids;
}

SequenceTagger::SequenceTagger(Architecture role, std::optional<Dimension> dimension,
                               std::vector<std::string> labels,
                               const TaggerConfig& config, Vocabulary words,
                               Vocabulary chars, std::uint64_t seed)
    : role_(CheckRole(role, dimension)),
      dimension_(dimension),
      config_((config.Validate(), config)),
      seed_(seed),
      tags_(std::move(labels)),
      constraints_(BuildIobesConstraints(tags_)),
      init_rng_(seed),
      encoder_(params_, "encoder", config.encoder, std::move(words), std::move(chars),
               init_rng_),
      boundary_embeddings_(
          role == Architecture::kFeatureTaggerCascaded
              ? &params_.Create("boundary/embeddings", {2, config.boundary_dim})
              : nullptr),
      bilstm_(params_, "bilstm", InputDim(config, role), config.encoder.lstm_hidden,
              init_rng_) {
  if (tags_.labels().empty()) throw std::invalid_argument("tagger needs labels");
  if (boundary_embeddings_ != nullptr) {
    InitUniform(*boundary_embeddings_, kEmbeddingInitLimit, init_rng_);
  }
  projection_ = &params_.Create("projection/weights",
                                {bilstm_.output_dim(), tags_.size()});
  projection_bias_ = &params_.Create("projection/bias", {tags_.size()});
  transitions_ = &params_.Create("crf/transitions", {tags_.size() + 2, tags_.size() + 2});
  InitGlorotUniform(*projection_, bilstm_.output_dim(), tags_.size(), init_rng_);
}

Var SequenceTagger::Emissions(Tape& tape, const std::vector<std::string>& tokens,
                              std::span<const int> boundaries) const {
  Var x = encoder_.Embed(tape, tokens);
  if (cascaded()) {
    if (boundaries.size() != tokens.size()) {
      throw DataError("cascaded tagger needs one boundary id per token");
    }
    Var b = EmbeddingLookup(tape, tape.Parameter(*boundary_embeddings_), boundaries);
    const Var parts[] = {x, b};
    x = Concat(tape, parts);
  } else if (!boundaries.empty()) {
    throw std::invalid_argument("boundary ids given to a non-cascaded tagger");
  }
  Var h = bilstm_.Encode(tape, x);
  return AddBias(tape, MatMul(tape, h, tape.Parameter(*projection_)),
                 tape.Parameter(*projection_bias_));
}

Var SequenceTagger::Loss(Tape& tape, const TaggingExample& example) const {
  Var emissions = Emissions(tape, example.tokens, example.boundaries);
  return CrfNll(tape, emissions, tape.Parameter(*transitions_), example.gold,
                constraints_, config_.constrain_training);
}

std::vector<int> SequenceTagger::DecodeIndices(const std::vector<std::string>& tokens,
                                               std::span<const int> boundaries) const {
  Tape tape(/*record=*/false);
  Var emissions = Emissions(tape, tokens, boundaries);
  return Viterbi(emissions.tensor(), *transitions_, &constraints_);
}

TagSequence SequenceTagger::Decode(const std::vector<std::string>& tokens,
                                   std::span<const int> boundaries) const {
  return tags_.Tags(DecodeIndices(tokens, boundaries));
}

std::vector<LabeledSpan> SequenceTagger::Tag(const std::vector<std::string>& tokens,
                                             std::span<const int> boundaries) const {
  return DecodeIobes(Decode(tokens, boundaries)).spans;
}

TaggingExample SequenceTagger::MakeExample(
    const std::vector<std::string>& tokens, const std::vector<LabeledSpan>& gold_spans,
    const std::vector<LabeledSpan>& boundary_spans) const {
  TaggingExample ex;
  ex.tokens = tokens;
  const int n = static_cast<int>(tokens.size());
  ex.gold = tags_.Indices(EncodeIobes(gold_spans, n));
  if (cascaded()) ex.boundaries = BoundaryIds(boundary_spans, n);
  return ex;
}

std::vector<LabeledSpan> TagIntents(const std::vector<std::string>& tokens,
                                    const SequenceTagger& tagger) {
  if (tagger.architecture() != Architecture::kIntentTagger) {
    throw std::invalid_argument("TagIntents needs an intent tagger");
  }
  if (!tagger.trained()) throw std::logic_error("intent-tagger model is untrained");
  return tagger.Tag(tokens, {});
}

std::vector<LabeledSpan> TagFeaturesFlat(const std::vector<std::string>& tokens,
                                         const SequenceTagger& tagger) {
  if (tagger.architecture() != Architecture::kFeatureTaggerFlat) {
    throw std::invalid_argument("TagFeaturesFlat needs a flat feature tagger");
  }
  if (!tagger.trained()) {
    throw std::logic_error("feature-tagger-flat model is untrained");
  }
  return tagger.Tag(tokens, {});
}

std::vector<std::string> TagFeaturesCascaded(const std::vector<std::string>& tokens,
                                             const std::vector<LabeledSpan>& intent_spans,
                                             const SequenceTagger& tagger) {
  if (!tagger.cascaded()) {
    throw std::invalid_argument("TagFeaturesCascaded needs a cascaded feature tagger");
  }
  if (!tagger.trained()) {
    throw std::logic_error("feature-tagger-cascaded model is untrained");
  }
  const auto boundaries = BoundaryIds(intent_spans, static_cast<int>(tokens.size()));
  const auto feature_spans = tagger.Tag(tokens, boundaries);
  return AlignFeatureSpans(intent_spans, feature_spans, *tagger.dimension());
}

}  // namespace spanfeat
