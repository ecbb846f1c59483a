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

#include <sstream>

#include <gtest/gtest.h>

#include "spanfeat/core/ops.h"
#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"
#include "spanfeat/encoders/encoders.h"
#include "spanfeat/encoders/pretrained.h"

namespace spanfeat {
namespace {

Tensor RandomSequence(int n, int e, uint64_t seed) {
  Rng rng(seed);
  Tensor t({n, e});
  InitUniform(t, 1.0, rng);
  return t;
}

std::vector<double> RowOf(const Tensor& t, int r, int from, int count) {
  const auto row = t.row(r).subspan(from, count);
  return {row.begin(), row.end()};
}

std::vector<double> Values(Var v) {
  const auto values = v.tensor().values();
  return {values.begin(), values.end()};
}

TEST(EncoderConfig, TokenDimAndValidation) {
  EncoderConfig c;
  c.word_embedding_dims = {10, 5};
  c.char_filters = 7;
  EXPECT_EQ(c.TokenDim(), 22);
  c.lstm_hidden = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(TokenEncoder, ShapesAndIds) {
  Vocabulary words;
  words.Add("hello");
  Vocabulary chars;
  for (const char* ch : {"h", "H", "e", "l", "o"}) chars.Add(ch);
  EncoderConfig c;
  c.word_embedding_dims = {4, 3};
  c.char_embedding_dim = 5;
  c.char_filters = 6;
  ParameterStore store;
  Rng rng(1);
  TokenEncoder enc(store, "enc", c, words, chars, rng);
  EXPECT_EQ(enc.dim(), 13);

  const std::vector<std::string> tokens = {"Hello", "xyz", "h"};
  EXPECT_EQ(enc.WordIds(tokens), (std::vector<int>{words.Lookup("hello"), Vocabulary::kUnknown,
                                                   Vocabulary::kUnknown}));
  EXPECT_NE(enc.CharIds("H")[0], enc.CharIds("h")[0]);

  Tape tape(false);
  Var out = enc.Embed(tape, tokens);
  EXPECT_EQ(out.rows(), 3);
  EXPECT_EQ(out.cols(), 13);
}

TEST(CharCnn, SingleCharacterWordIsNonNegative) {
  ParameterStore store;
  Rng rng(2);
  CharCnn cnn(store, "c", 10, 4, 8, 3, rng);
  Tape tape(false);
  const int ids[] = {5};
  Var v = cnn.Encode(tape, ids);
  ASSERT_EQ(v.size(), 8u);
  for (double x : v.tensor().values()) EXPECT_GE(x, 0.0);  // ReLU before pooling
}

TEST(CharCnn, WidthOneIgnoresCharacterOrder) {
  // With unit-width filters, pooling sees a bag of characters.
  ParameterStore store;
  Rng rng(3);
  CharCnn cnn(store, "c", 10, 4, 6, 1, rng);
  Tape tape(false);
  const int abc[] = {2, 3, 4};
  const int cba[] = {4, 3, 2};
  EXPECT_EQ(Values(cnn.Encode(tape, abc)), Values(cnn.Encode(tape, cba)));
}

TEST(BiLstm, OutputShape) {
  ParameterStore store;
  Rng rng(4);
  BiLstm bi(store, "bi", 3, 5, rng);
  Tensor seq = RandomSequence(4, 3, 9);
  Tape tape(false);
  Var out = bi.Encode(tape, tape.Constant(seq));
  EXPECT_EQ(out.rows(), 4);
  EXPECT_EQ(out.cols(), 10);
  EXPECT_EQ(bi.output_dim(), 10);
}

TEST(BiLstm, DirectionsAreCausal) {
  ParameterStore store;
  Rng rng(5);
  const int h = 3;
  BiLstm bi(store, "bi", 2, h, rng);
  Tensor a = RandomSequence(4, 2, 11);
  Tensor b = a;
  b.values()[0] += 1.0;      // first token changed
  Tensor c = a;
  c.values()[3 * 2] += 1.0;  // last token changed
  Tape tape(false);
  const Tensor& oa = bi.Encode(tape, tape.Constant(a)).tensor();
  const Tensor& ob = bi.Encode(tape, tape.Constant(b)).tensor();
  const Tensor& oc = bi.Encode(tape, tape.Constant(c)).tensor();
  for (int t = 0; t < 3; ++t) EXPECT_EQ(RowOf(oa, t, 0, h), RowOf(oc, t, 0, h));
  for (int t = 1; t < 4; ++t) EXPECT_EQ(RowOf(oa, t, h, h), RowOf(ob, t, h, h));
  EXPECT_NE(RowOf(oa, 3, 0, h), RowOf(ob, 3, 0, h));
  EXPECT_NE(RowOf(oa, 0, h, h), RowOf(oc, 0, h, h));
}

TEST(BiLstm, SharedWeightsMirrorUnderReversal) {
  ParameterStore store;
  Rng rng(6);
  const int h = 4;
  const int n = 5;
  Lstm cell(store, "cell", 3, h, rng);
  Tensor seq = RandomSequence(n, 3, 12);
  Tensor reversed({n, 3});
  for (int t = 0; t < n; ++t) {
    for (int j = 0; j < 3; ++j) reversed.at(t, j) = seq.at(n - 1 - t, j);
  }
  Tape tape(false);
  const Tensor& fwd = BiLstm::Encode(tape, tape.Constant(seq), cell, cell).tensor();
  const Tensor& rev = BiLstm::Encode(tape, tape.Constant(reversed), cell, cell).tensor();
  for (int t = 0; t < n; ++t) {
    const auto f = RowOf(fwd, t, 0, h);
    const auto b = RowOf(rev, n - 1 - t, h, h);
    for (int k = 0; k < h; ++k) EXPECT_NEAR(f[k], b[k], 1e-14);
  }
}

TEST(Vocabularies, BuiltFromCorpus) {
  const std::vector<std::vector<std::string>> sentences = {{"A", "b"}, {"a", "c"}};
  const Vocabulary v = BuildWordVocabulary(sentences, 2);
  EXPECT_TRUE(v.Contains("a"));
  EXPECT_FALSE(v.Contains("b"));
  EXPECT_EQ(BuildWordVocabulary(sentences, 1).size(), 5);
}

TEST(Pretrained, ReadAndApply) {
  std::stringstream in("2 3\nhello 1 2 3\nworld 4 5 6\n");
  const PretrainedEmbeddings p = ReadPretrainedEmbeddings(in);
  EXPECT_EQ(p.dim, 3);
  ASSERT_EQ(p.vectors.size(), 2u);
  Vocabulary v;
  v.Add("hello");
  v.Add("other");
  Tensor table({v.size(), 3});
  EXPECT_EQ(ApplyPretrainedEmbeddings(p, v, table), 1);
  EXPECT_EQ(table.at(v.Lookup("hello"), 2), 3.0);
  EXPECT_EQ(table.at(v.Lookup("other"), 0), 0.0);
  Tensor narrow({v.size(), 2});
  EXPECT_THROW(ApplyPretrainedEmbeddings(p, v, narrow), ShapeError);
}

TEST(Pretrained, MalformedInput) {
  std::stringstream no_header("");
  EXPECT_THROW(ReadPretrainedEmbeddings(no_header), std::runtime_error);
  std::stringstream short_row("1 3\nhello 1 2\n");
  EXPECT_THROW(ReadPretrainedEmbeddings(short_row), std::runtime_error);
  std::stringstream wrong_count("3 1\na 1\n");
  EXPECT_THROW(ReadPretrainedEmbeddings(wrong_count), std::runtime_error);
  EXPECT_THROW(LoadPretrainedEmbeddings("/nonexistent/vectors.txt"), std::runtime_error);
}

}  // namespace
}  // namespace spanfeat
