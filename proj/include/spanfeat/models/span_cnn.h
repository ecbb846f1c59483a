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

#ifndef SPANFEAT_MODELS_SPAN_CNN_H_
#define SPANFEAT_MODELS_SPAN_CNN_H_

#include <string>
#include <vector>

#include "spanfeat/encoders/encoders.h"
#include "spanfeat/models/classifier.h"
#include "spanfeat/models/pooling.h"

namespace spanfeat {

struct SpanCnnConfig {
  std::vector<int> word_embedding_dims = {100};
  std::vector<int> filter_widths = {3, 4, 5};
  int filters_per_width = 20;

  void Validate() const;
};

// Span-level baseline: embeds only the span tokens, parallel CNN with
// max-over-time pooling, projection to labels. Never sees the context.
class SpanCnn : public SpanClassifier {
 public:
  SpanCnn(Dimension dimension, const SpanCnnConfig& config, Vocabulary words,
          std::uint64_t seed);

  Architecture architecture() const override { return Architecture::kSpanCnn; }
  const SpanCnnConfig& config() const { return config_; }

  Var Logits(Tape& tape, const std::vector<std::string>& tokens,
             std::span<const std::uint8_t> mask) const override;
  Var SpanLogits(Tape& tape, const std::vector<std::string>& span_tokens) const;

 private:
  SpanCnnConfig config_;
  WordEmbeddings embeddings_;
  ParallelCnnPooler pooler_;
  Projection output_;
};

// Predicted label for a non-empty span. Throws DataError on an empty span
// and std::logic_error on an untrained model.
std::string ClassifySpanCnn(const std::vector<std::string>& span_tokens,
                            const SpanCnn& model);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_SPAN_CNN_H_
