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

#include "spanfeat/eval/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace spanfeat {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json PrfJson(const Prf& p) {
  ordered_json j;
  j["precision"] = p.precision;
  j["recall"] = p.recall;
  j["f1"] = p.f1;
  j["tp"] = p.tp;
  j["fp"] = p.fp;
  j["fn"] = p.fn;
  if (p.precision_undefined) j["precision_undefined"] = true;
  if (p.recall_undefined) j["recall_undefined"] = true;
  return j;
}

Prf PrfFromJson(const json& j) {
  Prf p;
  p.precision = j.at("precision").get<double>();
  p.recall = j.at("recall").get<double>();
  p.f1 = j.at("f1").get<double>();
  p.tp = j.at("tp").get<int>();
  p.fp = j.at("fp").get<int>();
  p.fn = j.at("fn").get<int>();
  p.precision_undefined = j.value("precision_undefined", false);
  p.recall_undefined = j.value("recall_undefined", false);
  return p;
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * v);
  return buf;
}

std::string Pad(const std::string& s, size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

const FeatureSection* EvalReport::Find(Dimension d) const {
  for (const auto& f : features) {
    if (f.scores.dimension == d) return &f;
  }
  return nullptr;
}

void MergeReport(EvalReport& into, const EvalReport& other) {
  for (const auto& f : other.features) {
    if (into.Find(f.scores.dimension) != nullptr) {
      throw std::invalid_argument("report for " + into.model + " already has dimension " +
                                  std::string(DimensionName(f.scores.dimension)));
    }
    into.features.push_back(f);
  }
  std::sort(into.features.begin(), into.features.end(),
            [](const FeatureSection& a, const FeatureSection& b) {
              return DimensionIndex(a.scores.dimension) < DimensionIndex(b.scores.dimension);
            });
  if (!into.intent_spans) into.intent_spans = other.intent_spans;
}

ordered_json ReportToJson(const EvalReport& report) {
  ordered_json j;
  j["model"] = report.model;
  j["corpus"] = report.corpus;
  j["span_mode"] = report.span_mode;
  if (report.intent_spans) j["intent_spans"] = PrfJson(*report.intent_spans);
  ordered_json features = ordered_json::array();
  for (const auto& f : report.features) {
    const FeatureScores& s = f.scores;
    ordered_json fj;
    fj["dimension"] = std::string(DimensionName(s.dimension));
    fj["count"] = s.count;
    fj["accuracy"] = s.accuracy;
    fj["micro"] = PrfJson(s.micro);
    fj["macro_f1"] = s.macro_f1;
    fj["macro_labels"] = s.macro_labels;
    ordered_json labels = ordered_json::array();
    for (const auto& l : s.per_label) {
      ordered_json lj;
      lj["label"] = l.label;
      lj["support"] = l.support;
      lj["scores"] = PrfJson(l.prf);
      labels.push_back(std::move(lj));
    }
    fj["labels"] = std::move(labels);
    if (f.feature_spans) fj["feature_spans"] = PrfJson(*f.feature_spans);
    if (f.boundary_disagreement) fj["boundary_disagreement"] = *f.boundary_disagreement;
    features.push_back(std::move(fj));
  }
  j["features"] = std::move(features);
  return j;
}

EvalReport ReportFromJson(const json& j) {
  EvalReport r;
  r.model = j.at("model").get<std::string>();
  r.corpus = j.at("corpus").get<std::string>();
  r.span_mode = j.at("span_mode").get<std::string>();
  if (j.contains("intent_spans")) r.intent_spans = PrfFromJson(j.at("intent_spans"));
  for (const auto& fj : j.at("features")) {
    FeatureSection f;
    FeatureScores& s = f.scores;
    s.dimension = ParseDimension(fj.at("dimension").get<std::string>());
    s.count = fj.at("count").get<int>();
    s.accuracy = fj.at("accuracy").get<double>();
    s.micro = PrfFromJson(fj.at("micro"));
    s.macro_f1 = fj.at("macro_f1").get<double>();
    s.macro_labels = fj.at("macro_labels").get<std::vector<std::string>>();
    for (const auto& lj : fj.at("labels")) {
      LabelScore l;
      l.label = lj.at("label").get<std::string>();
      l.support = lj.at("support").get<int>();
      l.prf = PrfFromJson(lj.at("scores"));
      s.per_label.push_back(std::move(l));
    }
    if (fj.contains("feature_spans")) f.feature_spans = PrfFromJson(fj.at("feature_spans"));
    if (fj.contains("boundary_disagreement")) {
      f.boundary_disagreement = fj.at("boundary_disagreement").get<double>();
    }
    r.features.push_back(std::move(f));
  }
  return r;
}

std::string FormatFeatureTable(const std::vector<EvalReport>& reports) {
  size_t first = 7;
  for (Dimension d : kAllDimensions) first = std::max(first, DimensionName(d).size());
  std::vector<size_t> widths;
  for (const auto& r : reports) widths.push_back(std::max<size_t>(r.model.size(), 7));
  std::ostringstream out;
  out << Pad("feature", first, false);
  for (size_t m = 0; m < reports.size(); ++m) {
    out << "  " << Pad(reports[m].model, widths[m], true);
  }
  out << '\n';
  for (Dimension d : kAllDimensions) {
    bool any = false;
    for (const auto& r : reports) any = any || r.Find(d) != nullptr;
    if (!any) continue;
    out << Pad(std::string(DimensionName(d)), first, false);
    for (size_t m = 0; m < reports.size(); ++m) {
      const FeatureSection* f = reports[m].Find(d);
      out << "  " << Pad(f ? Percent(f->scores.micro.f1) : "-", widths[m], true);
    }
    out << '\n';
  }
  return out.str();
}

std::string FormatReport(const EvalReport& report) {
  std::ostringstream out;
  out << "model " << report.model << "  corpus " << report.corpus << "  spans "
      << report.span_mode << '\n';
  if (report.intent_spans) {
    const Prf& p = *report.intent_spans;
    out << "intent spans  P " << Percent(p.precision) << "  R " << Percent(p.recall)
        << "  F1 " << Percent(p.f1) << '\n';
  }
  for (const auto& f : report.features) {
    const FeatureScores& s = f.scores;
    out << DimensionName(s.dimension) << "  n=" << s.count << "  micro-F1 "
        << Percent(s.micro.f1) << "  macro-F1 " << Percent(s.macro_f1);
    if (f.boundary_disagreement) {
      out << "  boundary-disagreement " << Percent(*f.boundary_disagreement);
    }
    out << '\n';
    for (const auto& l : s.per_label) {
      out << "  " << Pad(l.label, 16, false) << " P " << Pad(Percent(l.prf.precision), 6, true)
          << (l.prf.precision_undefined ? "*" : " ") << " R "
          << Pad(Percent(l.prf.recall), 6, true) << (l.prf.recall_undefined ? "*" : " ")
          << " F1 " << Pad(Percent(l.prf.f1), 6, true) << "  support " << l.support << '\n';
    }
  }
  out << "(* zero denominator, reported as 0)\n";
  return out.str();
}

}  // namespace spanfeat
