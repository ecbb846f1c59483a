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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "spanfeat/core/parameters.h"
#include "spanfeat/data/corpus.h"
#include "spanfeat/data/features.h"
#include "spanfeat/data/iobes.h"
#include "spanfeat/data/synthetic.h"
#include "spanfeat/data/utterance.h"
#include "spanfeat/data/vocabulary.h"
#include "support/oracles.h"

namespace spanfeat {
namespace {

FeatureLabels Defaults() {
  FeatureLabels f;
  for (Dimension d : kAllDimensions) f[DimensionIndex(d)] = DefaultLabel(d);
  return f;
}

TEST(Features, LabelSetsAndDefaults) {
  EXPECT_EQ(DimensionLabels(Dimension::kCommunicativeFunction).size(), 5u);
  EXPECT_EQ(DefaultLabel(Dimension::kTense), "present");
  EXPECT_EQ(DefaultLabel(Dimension::kNegation), "positive");
  EXPECT_EQ(DefaultLabel(Dimension::kModality), "other");
  EXPECT_EQ(DefaultLabel(Dimension::kAttrCf), "self");
  EXPECT_EQ(DefaultLabel(Dimension::kAttrEv), "self");
  EXPECT_EQ(DefaultLabel(Dimension::kCommunicativeFunction), "inform");
  EXPECT_EQ(FindLabel(Dimension::kTense, "future"), 2);
  EXPECT_EQ(FindLabel(Dimension::kTense, "later"), -1);
  EXPECT_EQ(ParseDimension("attr_ev"), Dimension::kAttrEv);
  EXPECT_THROW(ParseDimension("mood"), std::invalid_argument);
}

TEST(Iobes, EncodeKnownLayout) {
  const std::vector<LabeledSpan> spans = {{0, 1, "a"}, {2, 5, "request-info"}};
  EXPECT_EQ(EncodeIobes(spans, 6),
            (TagSequence{"S-a", "O", "B-request-info", "I-request-info", "E-request-info", "O"}));
}

TEST(Iobes, RoundTrip) {
  const std::vector<LabeledSpan> spans = {{1, 3, "x"}, {3, 4, "y"}, {4, 7, "x"}};
  const auto back = DecodeIobes(EncodeIobes(spans, 8));
  EXPECT_EQ(back.spans, spans);
  EXPECT_EQ(back.repair_count, 0);
}

TEST(Iobes, RepairsIllFormedInput) {
  const auto d = DecodeIobes({"B-a", "O"});
  ASSERT_EQ(d.spans.size(), 1u);
  EXPECT_EQ(d.spans[0], (LabeledSpan{0, 1, "a"}));
  EXPECT_EQ(d.repair_count, 1);
  EXPECT_FALSE(IsValidIobes({"B-a", "O"}));
  EXPECT_FALSE(IsValidIobes({"I-a"}));
  EXPECT_FALSE(IsValidIobes({"B-a", "E-b"}));
  EXPECT_TRUE(IsValidIobes({"B-a", "I-a", "E-a", "S-b"}));
  // Decoding never throws and never produces overlaps.
  const auto messy = DecodeIobes({"I-a", "E-b", "B-a", "B-b", "S-a", "I-b"});
  EXPECT_NO_THROW(ValidateSpans(messy.spans, 6));
  EXPECT_GT(messy.repair_count, 0);
}

TEST(Iobes, RejectsOverlap) {
  EXPECT_THROW(EncodeIobes({{0, 3, "a"}, {2, 4, "b"}}, 5), DataError);
  EXPECT_THROW(EncodeIobes({{0, 6, "a"}}, 5), DataError);
}

TEST(Iobes, OracleAgreesWithValidator) {
  Rng rng(5);
  const std::vector<std::string> alphabet = {"O", "B-a", "I-a", "E-a", "S-a", "B-b", "E-b"};
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 500; ++i) {
    TagSequence tags(1 + i % 6);
    for (auto& t : tags) t = alphabet[pick(rng)];
    EXPECT_EQ(IsValidIobes(tags), oracle::LegalIobes(tags));
  }
}

TEST(Vocabulary, ReservedEntriesAndLookup) {
  Vocabulary v;
  EXPECT_EQ(v.size(), 2);
  EXPECT_EQ(v.Token(0), "<pad>");
  EXPECT_EQ(v.Token(1), "<unk>");
  const int i = v.Add("hello");
  EXPECT_EQ(v.Add("hello"), i);
  EXPECT_EQ(v.Lookup("hello"), i);
  EXPECT_EQ(v.Lookup("absent"), Vocabulary::kUnknown);
  EXPECT_EQ(Vocabulary::FromTokens(v.tokens()), v);
}

TEST(Vocabulary, BuilderOrdersByFrequencyThenText) {
  VocabularyBuilder b;
  for (const char* w : {"b", "a", "c", "c", "a", "d"}) b.Count(w);
  const Vocabulary v = b.Build(1);
  EXPECT_EQ(v.tokens(), (std::vector<std::string>{"<pad>", "<unk>", "a", "c", "b", "d"}));
  EXPECT_EQ(b.Build(2).size(), 4);
}

TEST(Vocabulary, Utf8Characters) {
  EXPECT_EQ(SplitCharacters("añb"), (std::vector<std::string>{"a", "ñ", "b"}));
  EXPECT_EQ(Lowercase("HeLLo"), "hello");
}

AnnotatedUtterance TwoIntentExample() {
  // Two spans of one utterance with different communicative functions.
  AnnotatedUtterance u;
  u.tokens = {"my", "app", "keeps", "crashing", "can", "you", "refund", "me"};
  IntentSpan issue{0, 4, "install", Defaults()};
  issue.feature(Dimension::kCommunicativeFunction) = "issue";
  IntentSpan request{4, 8, "refund", Defaults()};
  request.feature(Dimension::kCommunicativeFunction) = "request-action";
  u.spans = {issue, request};
  return u;
}

TEST(Corpus, RecordRoundTrip) {
  const AnnotatedUtterance u = TwoIntentExample();
  const std::string line = FormatRecord(u);
  EXPECT_EQ(ParseRecord(line), u);
  EXPECT_NE(line.find("\"request-action\""), std::string::npos);
}

TEST(Corpus, StreamRoundTripAndBlankLines) {
  Corpus c = {TwoIntentExample(), TwoIntentExample()};
  std::stringstream s;
  WriteCorpus(c, s);
  std::stringstream with_blank("\n" + s.str() + "\n");
  EXPECT_EQ(ReadCorpus(with_blank, "mem"), c);
}

TEST(Corpus, ErrorsNameTheLine) {
  std::stringstream s(FormatRecord(TwoIntentExample()) + "\n{\"tokens\": [\"a\"], \"spans\": "
                      "[{\"start\": 0, \"end\": 2, \"intent\": \"x\", \"features\": {}}]}\n");
  try {
    ReadCorpus(s, "bad.jsonl");
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("bad.jsonl:2"), std::string::npos);
  }
}

TEST(Corpus, RejectsUnknownFeatureLabel) {
  AnnotatedUtterance u = TwoIntentExample();
  u.spans[0].feature(Dimension::kTense) = "someday";
  EXPECT_THROW(ValidateUtterance(u), DataError);
}

TEST(Utterance, MaskedExamples) {
  const auto examples = MakeMaskedExamples({TwoIntentExample()}, Dimension::kCommunicativeFunction);
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_EQ(examples[1].SpanPositions(), (std::vector<int>{4, 5, 6, 7}));
  EXPECT_EQ(examples[0].gold, FindLabel(Dimension::kCommunicativeFunction, "issue"));
  MaskedExample noncontiguous = examples[0];
  noncontiguous.mask = {1, 0, 1, 0, 0, 0, 0, 0};
  EXPECT_EQ(noncontiguous.SpanTokens(), (std::vector<std::string>{"my", "keeps"}));
  noncontiguous.mask.assign(8, 0);
  EXPECT_THROW(noncontiguous.Validate(), DataError);
}

TEST(Synthetic, DeterministicUnderSeed) {
  SyntheticConfig c;
  c.train_size = 50;
  c.dev_size = 10;
  c.test_size = 10;
  const auto a = GenerateSynthetic(c);
  const auto b = GenerateSynthetic(c);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  c.seed = 8;
  EXPECT_NE(GenerateSynthetic(c).train, a.train);
}

TEST(Synthetic, SplitsUseDisjointFillers) {
  SyntheticConfig c;
  const auto pools = SyntheticFillerPools(c);
  std::set<std::string> seen;
  for (const auto& pool : pools) {
    for (const auto& w : pool) EXPECT_TRUE(seen.insert(w).second) << w;
  }
}

TEST(Synthetic, ShapeOfUtterances) {
  SyntheticConfig c;
  c.train_size = 300;
  const auto data = GenerateSynthetic(c);
  for (const auto& u : data.train) {
    EXPECT_NO_THROW(ValidateUtterance(u));
    EXPECT_GE(u.spans.size(), 1u);
    EXPECT_LE(u.spans.size(), 3u);
  }
}

TEST(Synthetic, FullRhoPutsEveryCueInEverySpan) {
  SyntheticConfig c;
  c.train_size = 100;
  c.rho.fill(1.0);
  const auto& lex = DefaultLexicon();
  for (const auto& u : GenerateSynthetic(c).train) {
    // No context prefix is needed.
    EXPECT_EQ(std::count(u.tokens.begin(), u.tokens.end(), lex.context_separator), 0);
    for (const auto& s : u.spans) {
      const int label = FindLabel(Dimension::kTense, s.feature(Dimension::kTense));
      const auto& cues = lex.cues[DimensionIndex(Dimension::kTense)][label];
      bool found = false;
      for (int i = s.start; i < s.end; ++i) {
        found = found || std::find(cues.begin(), cues.end(), u.tokens[i]) != cues.end();
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Synthetic, EnumeratedBayesMatchesPlugIn) {
  // The generator's span-only ceiling, by enumeration and by counting.
  SyntheticConfig c;
  c.train_size = 4000;
  c.test_size = 4000;
  c.rho[DimensionIndex(Dimension::kTense)] = 0.3;
  const auto data = GenerateSynthetic(c);
  const double enumerated =
      oracle::SpanOnlyBayesAccuracy(0.3, c.priors[DimensionIndex(Dimension::kTense)]);
  EXPECT_NEAR(enumerated, 0.3 + 0.7 * 0.5, 1e-12);
  EXPECT_NEAR(oracle::EmpiricalSpanOnlyAccuracy(data.train, data.test, Dimension::kTense),
              enumerated, 0.03);
}

TEST(Synthetic, RejectsBadConfig) {
  SyntheticConfig c;
  c.rho[0] = 1.5;
  EXPECT_THROW(GenerateSynthetic(c), std::invalid_argument);
}

}  // namespace
}  // namespace spanfeat
