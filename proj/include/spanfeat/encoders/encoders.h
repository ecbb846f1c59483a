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

#ifndef SPANFEAT_ENCODERS_ENCODERS_H_
#define SPANFEAT_ENCODERS_ENCODERS_H_

#include <span>
#include <string>
#include <vector>

#include "spanfeat/core/ops.h"
#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"
#include "spanfeat/data/utterance.h"
#include "spanfeat/data/vocabulary.h"

namespace spanfeat {

inline constexpr double kEmbeddingInitLimit = 0.25;
inline constexpr double kForgetGateBias = 1.0;

struct EncoderConfig {
  // One lookup table per entry; their outputs are concatenated.
  std::vector<int> word_embedding_dims = {100};
  int char_embedding_dim = 30;
  int char_filters = 30;
  int char_filter_width = 3;
  int lstm_hidden = 32;

  void Validate() const;
  // Width of one token representation: sum of word dims plus char filters.
  int TokenDim() const;
};

// Several embedding tables indexed by one shared vocabulary.
class WordEmbeddings {
 public:
  WordEmbeddings(ParameterStore& store, const std::string& prefix, int vocab_size,
                 const std::vector<int>& dims, Rng& rng);

  Var Lookup(Tape& tape, std::span<const int> ids) const;
  int dim() const { return dim_; }
  int num_tables() const { return static_cast<int>(tables_.size()); }
  Tensor& table(int i) const { return *tables_.at(i); }

 private:
  std::vector<Tensor*> tables_;
  int dim_ = 0;
};

// Character composition: embed, convolve, ReLU, max over positions.
class CharCnn {
 public:
  CharCnn(ParameterStore& store, const std::string& prefix, int char_vocab_size,
          int char_dim, int filters, int width, Rng& rng);

  Var Encode(Tape& tape, std::span<const int> char_ids) const;
  int dim() const { return filters_->dim(2); }

 private:
  Tensor* embeddings_;
  Tensor* filters_;
  Tensor* bias_;
};

class Lstm {
 public:
  Lstm(ParameterStore& store, const std::string& prefix, int input_dim, int hidden,
       Rng& rng);

  LstmWeights Weights(Tape& tape) const;
  int hidden() const { return hidden_; }

 private:
  Tensor* input_;
  Tensor* recurrent_;
  Tensor* bias_;
  int hidden_;
};

class BiLstm {
 public:
  BiLstm(ParameterStore& store, const std::string& prefix, int input_dim,
         int hidden, Rng& rng);

  // [n x e] -> [n x 2h]; row t is forward state t followed by backward
  // state t. Both directions start from zero states.
  Var Encode(Tape& tape, Var seq) const;
  static Var Encode(Tape& tape, Var seq, const Lstm& forward, const Lstm& backward);

  const Lstm& forward() const { return forward_; }
  const Lstm& backward() const { return backward_; }
  int output_dim() const { return 2 * forward_.hidden(); }

 private:
  Lstm forward_;
  Lstm backward_;
};

// Word ids use the lowercased token; character ids keep the original case.
class TokenEncoder {
 public:
  TokenEncoder(ParameterStore& store, const std::string& prefix,
               const EncoderConfig& config, Vocabulary words, Vocabulary chars,
               Rng& rng);

  // [n x TokenDim()]: word tables followed by the char-CNN vector.
  Var Embed(Tape& tape, const std::vector<std::string>& tokens) const;

  std::vector<int> WordIds(const std::vector<std::string>& tokens) const;
  std::vector<int> CharIds(const std::string& token) const;

  const Vocabulary& words() const { return words_; }
  const Vocabulary& chars() const { return chars_; }
  const WordEmbeddings& word_embeddings() const { return word_embeddings_; }
  const CharCnn& char_cnn() const { return char_cnn_; }
  int dim() const { return word_embeddings_.dim() + char_cnn_.dim(); }

 private:
  Vocabulary words_;
  Vocabulary chars_;
  WordEmbeddings word_embeddings_;
  CharCnn char_cnn_;
};

// Word vocabulary (lowercased, frequency >= min_count) over corpus tokens.
Vocabulary BuildWordVocabulary(const Corpus& corpus, int min_count = 2);
Vocabulary BuildWordVocabulary(const std::vector<std::vector<std::string>>& sentences,
                               int min_count = 2);
// Every character seen, original case.
Vocabulary BuildCharVocabulary(const Corpus& corpus);

}  // namespace spanfeat

#endif  // SPANFEAT_ENCODERS_ENCODERS_H_
