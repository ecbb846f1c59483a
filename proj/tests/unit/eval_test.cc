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

#include <gtest/gtest.h>

#include "spanfeat/core/parameters.h"
#include "spanfeat/eval/compare.h"
#include "spanfeat/eval/metrics.h"
#include "spanfeat/eval/report.h"

namespace spanfeat {
namespace {

TEST(Prf, ZeroDenominators) {
  const Prf p = MakePrf(0, 0, 0);
  EXPECT_TRUE(p.precision_undefined);
  EXPECT_TRUE(p.recall_undefined);
  EXPECT_EQ(p.f1, 0.0);
  const Prf q = MakePrf(0, 2, 0);
  EXPECT_FALSE(q.precision_undefined);
  EXPECT_TRUE(q.recall_undefined);
}

TEST(SpanF1, ExactMatchingOnly) {
  const std::vector<LabeledSpan> pred = {{0, 2, "a"}, {2, 4, "b"}};
  const std::vector<LabeledSpan> gold = {{0, 2, "a"}, {2, 3, "b"}, {3, 4, "b"}, {4, 5, "c"}};
  const Prf p = SpanF1(pred, gold);
  EXPECT_EQ(p.tp, 1);
  EXPECT_EQ(p.fp, 1);
  EXPECT_EQ(p.fn, 3);
  EXPECT_DOUBLE_EQ(p.precision, 0.5);
  EXPECT_DOUBLE_EQ(p.recall, 0.25);
  EXPECT_NEAR(p.f1, 1.0 / 3.0, 1e-15);
  // A right boundary with the wrong label is still a miss.
  EXPECT_EQ(SpanF1({{0, 2, "b"}}, {{0, 2, "a"}}).tp, 0);
}

TEST(SpanF1, PoolsCountsAcrossUtterances) {
  const Prf p = SpanF1({{{0, 1, "a"}}, {}}, {{{0, 1, "a"}}, {{0, 1, "a"}}});
  EXPECT_EQ(p.tp, 1);
  EXPECT_EQ(p.fn, 1);
  EXPECT_DOUBLE_EQ(p.recall, 0.5);
}

TEST(FeatureF1, PerLabelScores) {
  const std::vector<std::string> gold = {"negative", "negative", "positive", "positive"};
  const std::vector<std::string> pred = {"negative", "positive", "positive", "positive"};
  const FeatureScores s = FeatureF1(pred, gold, Dimension::kNegation);
  ASSERT_EQ(s.per_label.size(), 2u);
  const LabelScore& neg = s.per_label[FindLabel(Dimension::kNegation, "negative")];
  EXPECT_EQ(neg.support, 2);
  EXPECT_DOUBLE_EQ(neg.prf.precision, 1.0);
  EXPECT_DOUBLE_EQ(neg.prf.recall, 0.5);
  EXPECT_NEAR(neg.prf.f1, 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.accuracy, 0.75);
}

TEST(FeatureF1, MicroEqualsAccuracy) {
  Rng rng(4);
  const auto& labels = DimensionLabels(Dimension::kCommunicativeFunction);
  std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
  std::vector<std::string> gold(57);
  std::vector<std::string> pred(57);
  for (size_t i = 0; i < gold.size(); ++i) {
    gold[i] = labels[pick(rng)];
    pred[i] = labels[pick(rng)];
  }
  const FeatureScores s = FeatureF1(pred, gold, Dimension::kCommunicativeFunction);
  EXPECT_NEAR(s.micro.f1, s.accuracy, 1e-15);
  EXPECT_EQ(s.count, 57);
}

TEST(FeatureF1, MacroAveragesOnlyPresentLabels) {
  const FeatureScores s =
      FeatureF1({"past", "present", "present"}, {"past", "past", "present"}, Dimension::kTense);
  EXPECT_EQ(s.macro_labels, (std::vector<std::string>{"past", "present"}));
  const double past = 2.0 * 1.0 * 0.5 / 1.5;
  const double present = 2.0 * 0.5 * 1.0 / 1.5;
  EXPECT_NEAR(s.macro_f1, (past + present) / 2, 1e-15);
}

TEST(FeatureF1, InvariantUnderPermutation) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"past", "past"}, {"future", "past"}, {"present", "present"},
      {"future", "future"}, {"past", "present"}, {"present", "future"}};
  auto score = [&] {
    std::vector<std::string> p;
    std::vector<std::string> g;
    for (const auto& [a, b] : pairs) {
      p.push_back(a);
      g.push_back(b);
    }
    return FeatureF1(p, g, Dimension::kTense);
  };
  const FeatureScores base = score();
  Rng rng(8);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const FeatureScores s = score();
    EXPECT_DOUBLE_EQ(s.macro_f1, base.macro_f1);
    EXPECT_DOUBLE_EQ(s.micro.f1, base.micro.f1);
  }
}

TEST(FeatureF1, RejectsBadInput) {
  EXPECT_THROW(FeatureF1({"past"}, {}, Dimension::kTense), DataError);
  EXPECT_THROW(FeatureF1({"someday"}, {"past"}, Dimension::kTense), DataError);
}

EvalReport ReportWith(const std::string& model, Dimension d, double micro) {
  EvalReport r;
  r.model = model;
  r.corpus = "test.jsonl";
  FeatureSection s;
  s.scores.dimension = d;
  s.scores.micro.f1 = micro;
  s.scores.accuracy = micro;
  r.features.push_back(s);
  return r;
}

std::vector<EvalReport> FourModels(double gl, double cnn, double no_global, double no_shared) {
  return {ReportWith(kGlobalLocalName, Dimension::kTense, gl),
          ReportWith(kSpanCnnName, Dimension::kTense, cnn),
          ReportWith(kNoGlobalName, Dimension::kTense, no_global),
          ReportWith(kNoSharedName, Dimension::kTense, no_shared)};
}

TEST(Compare, OrderingMarginsAndTolerance) {
  EXPECT_TRUE(CompareModels(FourModels(0.9, 0.8, 0.84, 0.89)).pass());
  EXPECT_FALSE(CompareModels(FourModels(0.9, 0.87, 0.8, 0.9)).pass());  // span-CNN too close
  EXPECT_TRUE(CompareModels(FourModels(0.9, 0.8, 0.8, 0.82)).pass());   // between the two
  EXPECT_FALSE(CompareModels(FourModels(0.9, 0.8, 0.8, 0.78)).pass());  // below span-CNN
  const ComparisonRow row = CompareModels(FourModels(0.9, 0.8, 0.7, 0.95)).rows.at(0);
  EXPECT_NEAR(row.delta_span_cnn, 0.1, 1e-12);
  EXPECT_NEAR(row.delta_no_global, 0.2, 1e-12);
  EXPECT_TRUE(row.no_shared_ok);
}

TEST(Compare, MergesDimensionsAndNamesMissingModels) {
  auto reports = FourModels(0.9, 0.8, 0.8, 0.9);
  reports.push_back(ReportWith(kGlobalLocalName, Dimension::kNegation, 0.9));
  EXPECT_THROW(CompareModels(reports), std::invalid_argument);  // others lack negation
  for (const char* name : {kSpanCnnName, kNoGlobalName, kNoSharedName}) {
    reports.push_back(ReportWith(name, Dimension::kNegation, name == kNoSharedName ? 0.4 : 0.5));
  }
  const Comparison c = CompareModels(reports);
  EXPECT_EQ(c.rows.size(), 2u);
  EXPECT_FALSE(c.pass());  // no-shared falls far short on negation

  auto missing = FourModels(0.9, 0.8, 0.8, 0.9);
  missing.erase(missing.begin() + 1);
  try {
    CompareModels(missing);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find(kSpanCnnName), std::string::npos);
  }
}

TEST(Report, JsonRoundTrip) {
  EvalReport r = ReportWith("feature-tagger-flat", Dimension::kTense, 0.5);
  r.features[0].scores = FeatureF1({"past", "future"}, {"past", "past"}, Dimension::kTense);
  r.features[0].feature_spans = MakePrf(3, 1, 2);
  r.features[0].boundary_disagreement = 0.25;
  r.intent_spans = MakePrf(0, 0, 0);
  const std::string dumped = ReportToJson(r).dump();
  EXPECT_EQ(ReportToJson(ReportFromJson(nlohmann::json::parse(dumped))).dump(), dumped);
}

TEST(Report, MergeRejectsDuplicateDimension) {
  EvalReport a = ReportWith("span-cnn", Dimension::kTense, 0.5);
  MergeReport(a, ReportWith("span-cnn", Dimension::kNegation, 0.7));
  EXPECT_NE(a.Find(Dimension::kNegation), nullptr);
  EXPECT_EQ(a.Find(Dimension::kModality), nullptr);
  EXPECT_THROW(MergeReport(a, ReportWith("span-cnn", Dimension::kTense, 0.1)),
               std::invalid_argument);
}

TEST(Report, FeatureTableCells) {
  const std::string table = FormatFeatureTable(
      {ReportWith("span-cnn", Dimension::kTense, 0.93333),
       ReportWith("global-local", Dimension::kNegation, 1.0)});
  EXPECT_NE(table.find("93.33"), std::string::npos);
  EXPECT_NE(table.find("100.00"), std::string::npos);
  EXPECT_NE(table.find("-"), std::string::npos);
}

}  // namespace
}  // namespace spanfeat
