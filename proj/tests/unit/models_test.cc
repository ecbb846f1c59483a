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

#include <random>

#include <gtest/gtest.h>

#include "spanfeat/core/tape.h"
#include "spanfeat/models/align.h"
#include "spanfeat/models/bundle.h"
#include "spanfeat/models/global_local.h"
#include "spanfeat/models/sequence_tagger.h"
#include "spanfeat/models/span_cnn.h"

namespace spanfeat {
namespace {

const std::vector<std::string> kWords = {"i", "did", "not", "pay", "the", "bill", "yet", "and",
                                         "will", "cancel", "my", "plan"};

Vocabulary SmallVocabulary() {
  Vocabulary v;
  for (const auto& w : kWords) v.Add(w);
  return v;
}

Vocabulary SmallChars() {
  Vocabulary v;
  for (const auto& w : kWords) {
    for (const auto& c : SplitCharacters(w)) v.Add(c);
  }
  return v;
}

TaggerConfig SmallTagger() {
  TaggerConfig c;
  c.encoder.word_embedding_dims = {4};
  c.encoder.char_embedding_dim = 3;
  c.encoder.char_filters = 3;
  c.encoder.lstm_hidden = 4;
  c.boundary_dim = 2;
  return c;
}

SpanCnnConfig SmallCnn() {
  SpanCnnConfig c;
  c.word_embedding_dims = {4};
  c.filter_widths = {2, 3};
  c.filters_per_width = 3;
  return c;
}

GlobalLocalConfig SmallGlobalLocal() {
  GlobalLocalConfig c;
  c.word_embedding_dims = {4};
  c.filter_widths = {2, 3};
  c.filters_per_width = 3;
  return c;
}

std::vector<std::string> RandomTokens(Rng& rng, int n) {
  std::uniform_int_distribution<size_t> pick(0, kWords.size() - 1);
  std::vector<std::string> out(n);
  for (auto& t : out) t = kWords[pick(rng)];
  return out;
}

std::vector<double> LogitValues(const SpanClassifier& m, const std::vector<std::string>& tokens,
                                const std::vector<uint8_t>& mask) {
  Tape tape(false);
  const auto values = m.Logits(tape, tokens, mask).tensor().values();
  return {values.begin(), values.end()};
}

TEST(Align, LargestOverlapWins) {
  const std::vector<LabeledSpan> intents = {{0, 4, "x"}, {4, 6, "y"}, {6, 8, "z"}};
  const std::vector<LabeledSpan> features = {{0, 1, "past"}, {1, 5, "future"}};
  EXPECT_EQ(AlignFeatureSpans(intents, features, Dimension::kTense),
            (std::vector<std::string>{"future", "future", "present"}));
}

TEST(Align, TiesGoToEarlierSpan) {
  const std::vector<LabeledSpan> intents = {{0, 4, "x"}};
  const std::vector<LabeledSpan> features = {{0, 2, "past"}, {2, 4, "future"}};
  EXPECT_EQ(AlignFeatureSpans(intents, features, Dimension::kTense)[0], "past");
}

TEST(Align, BoundaryDisagreement) {
  const std::vector<std::vector<LabeledSpan>> intents = {{{0, 2, "a"}, {2, 4, "b"}}, {}};
  const std::vector<std::vector<LabeledSpan>> features = {{{0, 2, "past"}, {2, 3, "past"}}, {}};
  EXPECT_DOUBLE_EQ(BoundaryDisagreementRate(intents, features), 0.5);
  EXPECT_EQ(BoundaryDisagreementRate({}, {}), 0.0);
  EXPECT_THROW(BoundaryDisagreementRate(intents, {}), std::invalid_argument);
}

TEST(SequenceTagger, BoundaryIds) {
  EXPECT_EQ(BoundaryIds({{1, 3, "a"}}, 4), (std::vector<int>{0, 1, 1, 0}));
}

TEST(SequenceTagger, RoleAndDimensionMustAgree) {
  EXPECT_THROW(SequenceTagger(Architecture::kIntentTagger, Dimension::kTense, {"a"}, SmallTagger(),
                              SmallVocabulary(), SmallChars(), 1),
               std::invalid_argument);
  EXPECT_THROW(SequenceTagger(Architecture::kFeatureTaggerFlat, std::nullopt,
                              DimensionLabels(Dimension::kTense), SmallTagger(), SmallVocabulary(),
                              SmallChars(), 1),
               std::invalid_argument);
}

TEST(SequenceTagger, UntrainedModelRefusesToTag) {
  SequenceTagger t(Architecture::kIntentTagger, std::nullopt, {"pay"}, SmallTagger(),
                   SmallVocabulary(), SmallChars(), 1);
  EXPECT_THROW(TagIntents({"pay", "the", "bill"}, t), std::logic_error);
  t.MarkTrained();
  const auto spans = TagIntents({"pay", "the", "bill"}, t);
  EXPECT_NO_THROW(ValidateSpans(spans, 3));
}

TEST(SequenceTagger, CascadedBoundaryEmbeddingsReceiveGradient) {
  SequenceTagger t(Architecture::kFeatureTaggerCascaded, Dimension::kNegation,
                   DimensionLabels(Dimension::kNegation), SmallTagger(), SmallVocabulary(),
                   SmallChars(), 3);
  const std::vector<std::string> tokens = {"i", "did", "not", "pay"};
  const auto example = t.MakeExample(tokens, {{0, 4, "negative"}}, {{0, 4, "x"}});
  EXPECT_EQ(example.boundaries, (std::vector<int>{1, 1, 1, 1}));
  Tape tape;
  tape.Backward(t.Loss(tape, example));
  const Tensor* boundary = t.params().Find("boundary/embeddings");
  ASSERT_NE(boundary, nullptr);
  double norm = 0;
  for (double g : boundary->grad()) norm += g * g;
  EXPECT_GT(norm, 0.0);
}

TEST(SequenceTagger, DecodingIsAlwaysLegal) {
  SequenceTagger t(Architecture::kFeatureTaggerFlat, Dimension::kModality,
                   DimensionLabels(Dimension::kModality), SmallTagger(), SmallVocabulary(),
                   SmallChars(), 4);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto tokens = RandomTokens(rng, 1 + i % 7);
    EXPECT_TRUE(IsValidIobes(t.Decode(tokens, {})));
  }
}

TEST(SpanCnn, SeesOnlyMaskedTokens) {
  SpanCnn m(Dimension::kTense, SmallCnn(), SmallVocabulary(), 5);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto tokens = RandomTokens(rng, 6);
    std::vector<uint8_t> mask = {0, 1, 1, 0, 1, 0};
    const auto before = LogitValues(m, tokens, mask);
    auto changed = tokens;
    const auto fresh = RandomTokens(rng, 3);
    changed[0] = fresh[0];
    changed[3] = fresh[1];
    changed[5] = fresh[2];
    EXPECT_EQ(LogitValues(m, changed, mask), before);
    Tape tape(false);
    const auto span = m.SpanLogits(tape, {tokens[1], tokens[2], tokens[4]}).tensor().values();
    EXPECT_EQ(std::vector<double>(span.begin(), span.end()), before);
  }
}

TEST(SpanCnn, RejectsBadMasks) {
  SpanCnn m(Dimension::kTense, SmallCnn(), SmallVocabulary(), 5);
  const std::vector<std::string> tokens = {"i", "did"};
  EXPECT_THROW(LogitValues(m, tokens, {0, 0}), DataError);
  EXPECT_THROW(LogitValues(m, tokens, {1}), DataError);
  EXPECT_THROW(ClassifySpanCnn({"pay"}, m), std::logic_error);
  m.MarkTrained();
  EXPECT_THROW(ClassifySpanCnn({}, m), DataError);
  const std::string label = ClassifySpanCnn({"pay"}, m);
  EXPECT_GE(FindLabel(Dimension::kTense, label), 0);
}

TEST(GlobalLocal, ContextMattersOnlyWithGlobalPath) {
  GlobalLocal full(Dimension::kTense, SmallGlobalLocal(), SmallVocabulary(), 6);
  GlobalLocalConfig no_global = SmallGlobalLocal();
  no_global.use_global_context = false;
  GlobalLocal ablated(Dimension::kTense, no_global, SmallVocabulary(), 6);

  const std::vector<std::string> a = {"i", "will", "pay", "the", "bill"};
  const std::vector<std::string> b = {"i", "did", "pay", "the", "bill"};
  const std::vector<uint8_t> mask = {0, 0, 1, 1, 1};
  EXPECT_NE(LogitValues(full, a, mask), LogitValues(full, b, mask));
  EXPECT_EQ(LogitValues(ablated, a, mask), LogitValues(ablated, b, mask));
}

TEST(GlobalLocal, RepresentationIsGlobalThenLocal) {
  GlobalLocal m(Dimension::kTense, SmallGlobalLocal(), SmallVocabulary(), 7);
  Tape tape(false);
  const SpanRepresentation r = m.Represent(tape, {"i", "did", "not", "pay"}, std::vector<uint8_t>{0, 1, 0, 1});
  ASSERT_EQ(r.joint.size(), r.global.size() + r.local.size());
  const auto& j = r.joint.tensor().values();
  const auto& g = r.global.tensor().values();
  const auto& l = r.local.tensor().values();
  EXPECT_TRUE(std::equal(g.begin(), g.end(), j.begin()));
  EXPECT_TRUE(std::equal(l.begin(), l.end(), j.begin() + g.size()));
}

TEST(GlobalLocal, VariantsHaveExpectedParameters) {
  GlobalLocalConfig separate = SmallGlobalLocal();
  separate.share_encoder_embedding = false;
  GlobalLocal m(Dimension::kTense, separate, SmallVocabulary(), 8);
  EXPECT_NE(m.params().Find("global/embeddings/table0"), nullptr);
  EXPECT_NE(m.params().Find("local/embeddings/table0"), nullptr);
  GlobalLocalConfig shared_pool = SmallGlobalLocal();
  shared_pool.share_pooling_params = true;
  GlobalLocal p(Dimension::kTense, shared_pool, SmallVocabulary(), 8);
  EXPECT_LT(p.params().NumValues(), GlobalLocal(Dimension::kTense, SmallGlobalLocal(),
                                                SmallVocabulary(), 8)
                                        .params()
                                        .NumValues());
}

std::vector<std::unique_ptr<Model>> OneOfEach() {
  std::vector<std::unique_ptr<Model>> out;
  out.push_back(std::make_unique<SequenceTagger>(Architecture::kIntentTagger, std::nullopt,
                                                 std::vector<std::string>{"pay", "cancel"},
                                                 SmallTagger(), SmallVocabulary(), SmallChars(), 9));
  out.push_back(std::make_unique<SequenceTagger>(
      Architecture::kFeatureTaggerCascaded, Dimension::kTense, DimensionLabels(Dimension::kTense),
      SmallTagger(), SmallVocabulary(), SmallChars(), 9));
  out.push_back(std::make_unique<SpanCnn>(Dimension::kNegation, SmallCnn(), SmallVocabulary(), 9));
  GlobalLocalConfig gl = SmallGlobalLocal();
  gl.share_encoder_embedding = false;
  out.push_back(std::make_unique<GlobalLocal>(Dimension::kModality, gl, SmallVocabulary(), 9));
  return out;
}

TEST(Bundle, RoundTripIsByteIdentical) {
  for (auto& m : OneOfEach()) {
    m->MarkTrained();
    const std::string first = ModelToJson(*m).dump();
    const auto loaded = ModelFromJson(nlohmann::json::parse(first));
    EXPECT_TRUE(loaded->trained());
    EXPECT_EQ(loaded->architecture(), m->architecture());
    EXPECT_EQ(ModelToJson(*loaded).dump(), first);
  }
}

TEST(Bundle, LoadedClassifierPredictsIdentically) {
  SpanCnn m(Dimension::kTense, SmallCnn(), SmallVocabulary(), 10);
  m.MarkTrained();
  const auto loaded = ModelFromJson(nlohmann::json::parse(ModelToJson(m).dump()));
  const auto& copy = dynamic_cast<const SpanCnn&>(*loaded);
  const std::vector<std::string> tokens = {"i", "will", "cancel", "unknownword"};
  const std::vector<uint8_t> mask = {1, 1, 1, 1};
  EXPECT_EQ(LogitValues(copy, tokens, mask), LogitValues(m, tokens, mask));
}

TEST(Bundle, RejectsCorruptBundles) {
  SpanCnn m(Dimension::kTense, SmallCnn(), SmallVocabulary(), 11);
  const nlohmann::json good = nlohmann::json::parse(ModelToJson(m).dump());

  auto version = good;
  version["format_version"] = kBundleFormatVersion + 1;
  EXPECT_THROW(ModelFromJson(version), BundleError);

  auto arch = good;
  arch["architecture"] = "transformer";
  EXPECT_THROW(ModelFromJson(arch), BundleError);

  auto shape = good;
  shape["parameters"][0]["shape"][0] = 1;
  EXPECT_THROW(ModelFromJson(shape), BundleError);

  auto missing = good;
  missing["parameters"].erase(missing["parameters"].begin());
  EXPECT_THROW(ModelFromJson(missing), BundleError);

  auto duplicate = good;
  duplicate["parameters"].push_back(duplicate["parameters"][0]);
  EXPECT_THROW(ModelFromJson(duplicate), BundleError);

  EXPECT_THROW(LoadModel("/nonexistent/model.json"), std::exception);
}

}  // namespace
}  // namespace spanfeat
