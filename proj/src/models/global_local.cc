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

#include "spanfeat/models/global_local.h"

#include <stdexcept>

#include "spanfeat/core/ops.h"

namespace spanfeat {

void GlobalLocalConfig::Validate() const {
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

int EmbeddingDim(const GlobalLocalConfig& config) {
  config.Validate();
  int dim = 0;
  for (int d : config.word_embedding_dims) dim += d;
  return dim;
}

}  // namespace

// Parameter names: embeddings (shared) or global/embeddings + local/embeddings;
// pool (shared) or global/pool + local/pool; output.
GlobalLocal::GlobalLocal(Dimension dimension, const GlobalLocalConfig& config,
                         Vocabulary words, std::uint64_t seed)
    : SpanClassifier(dimension, std::move(words), seed),
      config_((config.Validate(), config)),
      global_embeddings_(params_,
                         config.share_encoder_embedding ? "embeddings" : "global/embeddings",
                         this->words().size(), config.word_embedding_dims, init_rng_),
      local_embeddings_(config.share_encoder_embedding
                            ? nullptr
                            : std::make_unique<WordEmbeddings>(
                                  params_, "local/embeddings", this->words().size(),
                                  config.word_embedding_dims, init_rng_)),
      global_pooler_(params_, config.share_pooling_params ? "pool" : "global/pool",
                     EmbeddingDim(config), config.filter_widths, config.filters_per_width,
                     init_rng_),
      local_pooler_(config.share_pooling_params
                        ? nullptr
                        : std::make_unique<ParallelCnnPooler>(
                              params_, "local/pool", EmbeddingDim(config),
                              config.filter_widths, config.filters_per_width, init_rng_)),
      output_(params_, "output", 2 * global_pooler_.output_dim(), num_labels(),
              init_rng_) {}

SpanRepresentation GlobalLocal::Represent(Tape& tape, const std::vector<std::string>& tokens,
                                          std::span<const std::uint8_t> mask) const {
  CheckMask(tokens, mask);
  const std::vector<int> ids = WordIds(tokens);
  std::vector<int> positions;
  std::vector<int> span_ids;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (mask[i] != 0) {
      positions.push_back(static_cast<int>(i));
      span_ids.push_back(ids[i]);
    }
  }
  const std::vector<int>& global_ids = config_.use_global_context ? ids : span_ids;

  Var global_matrix = global_embeddings_.Lookup(tape, global_ids);
  Var local_matrix;
  if (local_embeddings_ != nullptr) {
    local_matrix = local_embeddings_->Lookup(tape, span_ids);
  } else if (config_.use_global_context) {
    local_matrix = GatherRows(tape, global_matrix, positions);
  } else {
    local_matrix = global_matrix;
  }

  const ParallelCnnPooler& local_pooler =
      local_pooler_ != nullptr ? *local_pooler_ : global_pooler_;
  SpanRepresentation rep;
  rep.global = global_pooler_.Pool(tape, global_matrix);
  rep.local = local_pooler.Pool(tape, local_matrix);
  const Var parts[] = {rep.global, rep.local};
  rep.joint = Concat(tape, parts);
  return rep;
}

Var GlobalLocal::Logits(Tape& tape, const std::vector<std::string>& tokens,
                        std::span<const std::uint8_t> mask) const {
  return output_.Apply(tape, Represent(tape, tokens, mask).joint);
}

std::string ClassifyGlobalLocal(const std::vector<std::string>& tokens,
                                std::span<const std::uint8_t> mask,
                                const GlobalLocal& model) {
  CheckMask(tokens, mask);
  if (!model.trained()) throw std::logic_error("global-local model is untrained");
  return model.labels()[model.PredictIndex(tokens, mask)];
}

}  // namespace spanfeat
