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

#ifndef SPANFEAT_MODELS_GLOBAL_LOCAL_H_
#define SPANFEAT_MODELS_GLOBAL_LOCAL_H_

#include <memory>
#include <string>
#include <vector>

#include "spanfeat/encoders/encoders.h"
#include "spanfeat/models/classifier.h"
#include "spanfeat/models/pooling.h"

namespace spanfeat {

struct GlobalLocalConfig {
  std::vector<int> word_embedding_dims = {100};
  std::vector<int> filter_widths = {3, 4, 5};
  int filters_per_width = 20;
  // Embed the utterance once and gather the span rows from it. When false
  // the utterance and the span get their own tables.
  bool share_encoder_embedding = true;
  // When false both pooling paths see only the span tokens.
  bool use_global_context = true;
  // Use one pooler for g and l.
  bool share_pooling_params = false;

  void Validate() const;
};

struct SpanRepresentation {
  Var local;
  Var global;
  Var joint;  // concat(global, local)
};

// Pools the whole utterance (global path) and the masked rows (local path)
// with parallel CNNs, concatenates the two vectors and projects to labels.
class GlobalLocal : public SpanClassifier {
 public:
  GlobalLocal(Dimension dimension, const GlobalLocalConfig& config, Vocabulary words,
              std::uint64_t seed);

  Architecture architecture() const override { return Architecture::kGlobalLocal; }
  const GlobalLocalConfig& config() const { return config_; }

  SpanRepresentation Represent(Tape& tape, const std::vector<std::string>& tokens,
                               std::span<const std::uint8_t> mask) const;
  Var Logits(Tape& tape, const std::vector<std::string>& tokens,
             std::span<const std::uint8_t> mask) const override;

 private:
  GlobalLocalConfig config_;
  WordEmbeddings global_embeddings_;
  std::unique_ptr<WordEmbeddings> local_embeddings_;  // null when shared
  ParallelCnnPooler global_pooler_;
  std::unique_ptr<ParallelCnnPooler> local_pooler_;   // null when shared
  Projection output_;
};

// Label of the masked span. Throws DataError on an empty mask and
// std::logic_error on an untrained model.
std::string ClassifyGlobalLocal(const std::vector<std::string>& tokens,
                                std::span<const std::uint8_t> mask,
                                const GlobalLocal& model);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_GLOBAL_LOCAL_H_
