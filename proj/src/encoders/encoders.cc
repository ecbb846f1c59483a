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

#include "spanfeat/encoders/encoders.h"

#include <stdexcept>

namespace spanfeat {

void EncoderConfig::Validate() const {
  if (word_embedding_dims.empty()) {
    throw std::invalid_argument("encoder needs at least one word embedding table");
  }
  for (int d : word_embedding_dims) {
    if (d < 1) throw std::invalid_argument("word embedding dims must be >= 1");
  }
  if (char_embedding_dim < 1 || char_filters < 1 || char_filter_width < 1 ||
      lstm_hidden < 1) {
    throw std::invalid_argument("encoder dimensions must be >= 1");
  }
}

int EncoderConfig::TokenDim() const {
  int total = char_filters;
  for (int d : word_embedding_dims) total += d;
  return total;
}

WordEmbeddings::WordEmbeddings(ParameterStore& store, const std::string& prefix,
                               int vocab_size, const std::vector<int>& dims,
                               Rng& rng) {
  for (size_t i = 0; i < dims.size(); ++i) {
    Tensor& t = store.Create(prefix + "/table" + std::to_string(i),
                             {vocab_size, dims[i]});
    InitUniform(t, kEmbeddingInitLimit, rng);
    tables_.push_back(&t);
    dim_ += dims[i];
  }
}

Var WordEmbeddings::Lookup(Tape& tape, std::span<const int> ids) const {
  if (tables_.size() == 1) {
    return EmbeddingLookup(tape, tape.Parameter(*tables_[0]), ids);
  }
  std::vector<Var> parts;
  for (Tensor* t : tables_) {
    parts.push_back(EmbeddingLookup(tape, tape.Parameter(*t), ids));
  }
  return Concat(tape, parts);
}

CharCnn::CharCnn(ParameterStore& store, const std::string& prefix,
                 int char_vocab_size, int char_dim, int filters, int width,
                 Rng& rng) {
  embeddings_ = &store.Create(prefix + "/embeddings", {char_vocab_size, char_dim});
  filters_ = &store.Create(prefix + "/filters", {width, char_dim, filters});
  bias_ = &store.Create(prefix + "/bias", {filters});
  InitUniform(*embeddings_, kEmbeddingInitLimit, rng);
  InitGlorotUniform(*filters_, width * char_dim, filters, rng);
}

Var CharCnn::Encode(Tape& tape, std::span<const int> char_ids) const {
  Var chars = EmbeddingLookup(tape, tape.Parameter(*embeddings_), char_ids);
  Var conv = Conv1dSame(tape, chars, tape.Parameter(*filters_),
                        tape.Parameter(*bias_));
  return MaxOverTime(tape, Relu(tape, conv));
}

Lstm::Lstm(ParameterStore& store, const std::string& prefix, int input_dim,
           int hidden, Rng& rng)
    : hidden_(hidden) {
  input_ = &store.Create(prefix + "/input", {input_dim, 4 * hidden});
  recurrent_ = &store.Create(prefix + "/recurrent", {hidden, 4 * hidden});
  bias_ = &store.Create(prefix + "/bias", {4 * hidden});
  InitGlorotUniform(*input_, input_dim, 4 * hidden, rng);
  InitGlorotUniform(*recurrent_, hidden, 4 * hidden, rng);
  for (int j = hidden; j < 2 * hidden; ++j) (*bias_)[j] = kForgetGateBias;
}

LstmWeights Lstm::Weights(Tape& tape) const {
  return {tape.Parameter(*input_), tape.Parameter(*recurrent_),
          tape.Parameter(*bias_)};
}

BiLstm::BiLstm(ParameterStore& store, const std::string& prefix, int input_dim,
               int hidden, Rng& rng)
    : forward_(store, prefix + "/fw", input_dim, hidden, rng),
      backward_(store, prefix + "/bw", input_dim, hidden, rng) {}

Var BiLstm::Encode(Tape& tape, Var seq) const {
  return Encode(tape, seq, forward_, backward_);
}

Var BiLstm::Encode(Tape& tape, Var seq, const Lstm& forward, const Lstm& backward) {
  const int n = seq.rows();
  std::vector<Var> inputs;
  inputs.reserve(n);
  for (int t = 0; t < n; ++t) inputs.push_back(Row(tape, seq, t));

  auto run = [&](const Lstm& lstm, bool reverse) {
    const LstmWeights weights = lstm.Weights(tape);
    LstmState state{tape.Constant(Tensor({lstm.hidden()})),
                    tape.Constant(Tensor({lstm.hidden()}))};
    std::vector<Var> outputs(n);
    for (int i = 0; i < n; ++i) {
      const int t = reverse ? n - 1 - i : i;
      state = LstmCell(tape, inputs[t], state.h, state.c, weights);
      outputs[t] = state.h;
    }
    return StackRows(tape, outputs);
  };
  Var fw = run(forward, false);
  Var bw = run(backward, true);
  const Var halves[] = {fw, bw};
  return Concat(tape, halves);
}

TokenEncoder::TokenEncoder(ParameterStore& store, const std::string& prefix,
                           const EncoderConfig& config, Vocabulary words,
                           Vocabulary chars, Rng& rng)
    : words_(std::move(words)),
      chars_(std::move(chars)),
      word_embeddings_(store, prefix + "/words", words_.size(),
                       config.word_embedding_dims, rng),
      char_cnn_(store, prefix + "/chars", chars_.size(), config.char_embedding_dim,
                config.char_filters, config.char_filter_width, rng) {}

std::vector<int> TokenEncoder::WordIds(const std::vector<std::string>& tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(words_.Lookup(Lowercase(t)));
  return ids;
}

std::vector<int> TokenEncoder::CharIds(const std::string& token) const {
  std::vector<int> ids;
  for (const auto& c : SplitCharacters(token)) ids.push_back(chars_.Lookup(c));
  if (ids.empty()) ids.push_back(Vocabulary::kPadding);
  return ids;
}

Var TokenEncoder::Embed(Tape& tape, const std::vector<std::string>& tokens) const {
  if (tokens.empty()) throw DataError("cannot embed an empty token list");
  Var words = word_embeddings_.Lookup(tape, WordIds(tokens));
  std::vector<Var> char_vectors;
  char_vectors.reserve(tokens.size());
  for (const auto& t : tokens) char_vectors.push_back(char_cnn_.Encode(tape, CharIds(t)));
  const Var parts[] = {words, StackRows(tape, char_vectors)};
  return Concat(tape, parts);
}

Vocabulary BuildWordVocabulary(const std::vector<std::vector<std::string>>& sentences,
                               int min_count) {
  VocabularyBuilder builder;
  for (const auto& s : sentences) {
    for (const auto& t : s) builder.Count(Lowercase(t));
  }
  return builder.Build(min_count);
}

Vocabulary BuildWordVocabulary(const Corpus& corpus, int min_count) {
  VocabularyBuilder builder;
  for (const auto& u : corpus) {
    for (const auto& t : u.tokens) builder.Count(Lowercase(t));
  }
  return builder.Build(min_count);
}

Vocabulary BuildCharVocabulary(const Corpus& corpus) {
  VocabularyBuilder builder;
  for (const auto& u : corpus) {
    for (const auto& t : u.tokens) {
      for (const auto& c : SplitCharacters(t)) builder.Count(c);
    }
  }
  return builder.Build(1);
}

}  // namespace spanfeat
