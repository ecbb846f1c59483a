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

#include "spanfeat/models/span_cnn.h"

#include <stdexcept>

#include "spanfeat/core/ops.h"

namespace spanfeat {

void SpanCnnConfig::Validate() const {
  if (word_embedding_dims.empty()) throw std::invalid_argument("no word embedding tables");
  for (int d : word_embedding_dims) {
    if (d < 1) throw std::invalid_argument("word embedding dims must be >= 1");
  }
  if (filter_widths.empty()) throw std::invalid_argument("no filter widths");
  for (int w : filter_widths) {
    if (w < 1) throw std::invalid_argument("filter widths must be >= 1");
  }
  if (filters_per_width < 1) throw std::invalid_argument("filters_per_width must be >= 1");
}

namespace {

int EmbeddingDim(const SpanCnnConfig& config) {
  config.Validate();
  int dim = 0;
  for (int d : config.word_embedding_dims) dim += d;
  return dim;
}

}  // namespace

SpanCnn::SpanCnn(Dimension dimension, const SpanCnnConfig& config, Vocabulary words,
                 std::uint64_t seed)
    : SpanClassifier(dimension, std::move(words), seed),
      config_(config),
      embeddings_(params_, "embeddings", this->words().size(), config.word_embedding_dims,
                  init_rng_),
      pooler_(params_, "pool", EmbeddingDim(config), config.filter_widths,
              config.filters_per_width, init_rng_),
      output_(params_, "output", pooler_.output_dim(), num_labels(), init_rng_) {}

Var SpanCnn::SpanLogits(Tape& tape, const std::vector<std::string>& span_tokens) const {
  if (span_tokens.empty()) throw DataError("empty span");
  const auto ids = WordIds(span_tokens);
  return output_.Apply(tape, pooler_.Pool(tape, embeddings_.Lookup(tape, ids)));
}

Var SpanCnn::Logits(Tape& tape, const std::vector<std::string>& tokens,
                    std::span<const std::uint8_t> mask) const {
  CheckMask(tokens, mask);
  std::vector<std::string> span;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (mask[i] != 0) span.push_back(tokens[i]);
  }
  return SpanLogits(tape, span);
}

std::string ClassifySpanCnn(const std::vector<std::string>& span_tokens,
                            const SpanCnn& model) {
  if (span_tokens.empty()) throw DataError("empty span");
  if (!model.trained()) throw std::logic_error("span-cnn model is untrained");
  const std::vector<std::uint8_t> mask(span_tokens.size(), 1);
  return model.labels()[model.PredictIndex(span_tokens, mask)];
}

}  // namespace spanfeat
