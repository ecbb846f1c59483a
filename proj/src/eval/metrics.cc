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

#include "spanfeat/eval/metrics.h"

#include <algorithm>

namespace spanfeat {

Prf MakePrf(int tp, int fp, int fn) {
  Prf r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  if (tp + fp == 0) {
    r.precision_undefined = true;
  } else {
    r.precision = static_cast<double>(tp) / (tp + fp);
  }
  if (tp + fn == 0) {
    r.recall_undefined = true;
  } else {
    r.recall = static_cast<double>(tp) / (tp + fn);
  }
  if (r.precision + r.recall > 0) {
    r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

namespace {

int CountMatches(const std::vector<LabeledSpan>& pred, const std::vector<LabeledSpan>& gold) {
  // Spans within one utterance are distinct, but tolerate duplicates by
  // consuming each gold span once.
  std::vector<bool> used(gold.size(), false);
  int tp = 0;
  for (const auto& p : pred) {
    for (size_t g = 0; g < gold.size(); ++g) {
      if (!used[g] && gold[g] == p) {
        used[g] = true;
        ++tp;
        break;
      }
    }
  }
  return tp;
}

}  // namespace

Prf SpanF1(const std::vector<LabeledSpan>& pred, const std::vector<LabeledSpan>& gold) {
  const int tp = CountMatches(pred, gold);
  return MakePrf(tp, static_cast<int>(pred.size()) - tp, static_cast<int>(gold.size()) - tp);
}

Prf SpanF1(const std::vector<std::vector<LabeledSpan>>& pred,
           const std::vector<std::vector<LabeledSpan>>& gold) {
  if (pred.size() != gold.size()) {
    throw DataError("span_f1: prediction and gold utterance counts differ");
  }
  int tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < pred.size(); ++i) {
    const int m = CountMatches(pred[i], gold[i]);
    tp += m;
    fp += static_cast<int>(pred[i].size()) - m;
    fn += static_cast<int>(gold[i].size()) - m;
  }
  return MakePrf(tp, fp, fn);
}

FeatureScores FeatureF1(const std::vector<std::string>& pred,
                        const std::vector<std::string>& gold, Dimension dimension) {
  if (pred.size() != gold.size()) {
    throw DataError("feature_f1: " + std::to_string(pred.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold labels");
  }
  const auto& labels = DimensionLabels(dimension);
  const size_t k = labels.size();
  std::vector<int> tp(k, 0), fp(k, 0), fn(k, 0), gold_count(k, 0), pred_count(k, 0);
  int correct = 0;
  auto index = [&](const std::string& label) {
    const int i = FindLabel(dimension, label);
    if (i < 0) {
      throw DataError("label '" + label + "' is not in dimension " +
                      std::string(DimensionName(dimension)));
    }
    return i;
  };
  for (size_t i = 0; i < pred.size(); ++i) {
    const int p = index(pred[i]);
    const int g = index(gold[i]);
    ++pred_count[p];
    ++gold_count[g];
    if (p == g) {
      ++tp[p];
      ++correct;
    } else {
      ++fp[p];
      ++fn[g];
    }
  }

  FeatureScores s;
  s.dimension = dimension;
  s.count = static_cast<int>(pred.size());
  s.accuracy = s.count == 0 ? 0.0 : static_cast<double>(correct) / s.count;
  int sum_tp = 0, sum_fp = 0, sum_fn = 0;
  double macro_sum = 0;
  for (size_t i = 0; i < k; ++i) {
    LabelScore ls;
    ls.label = labels[i];
    ls.support = gold_count[i];
    ls.prf = MakePrf(tp[i], fp[i], fn[i]);
    sum_tp += tp[i];
    sum_fp += fp[i];
    sum_fn += fn[i];
    if (gold_count[i] > 0 || pred_count[i] > 0) {
      macro_sum += ls.prf.f1;
      s.macro_labels.push_back(labels[i]);
    }
    s.per_label.push_back(std::move(ls));
  }
  s.micro = MakePrf(sum_tp, sum_fp, sum_fn);
  s.macro_f1 = s.macro_labels.empty() ? 0.0 : macro_sum / s.macro_labels.size();
  return s;
}

}  // namespace spanfeat
