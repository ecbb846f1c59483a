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

#include "spanfeat/eval/compare.h"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spanfeat {
namespace {

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.2f", v);
  return buf;
}

std::string Score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%6.2f", 100 * v);
  return buf;
}

}  // namespace

bool Comparison::pass() const {
  if (rows.empty()) return false;
  for (const auto& r : rows) {
    if (!r.pass()) return false;
  }
  return true;
}

Comparison CompareModels(const std::vector<EvalReport>& reports) {
  std::map<std::string, EvalReport> by_name;
  for (const auto& r : reports) {
    auto [it, inserted] = by_name.emplace(r.model, r);
    if (!inserted) MergeReport(it->second, r);
  }
  auto get = [&](const char* name) -> const EvalReport& {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw std::invalid_argument(std::string("compare_models: missing report for model '") +
                                  name + "'");
    }
    return it->second;
  };
  const EvalReport& gl = get(kGlobalLocalName);
  const EvalReport& cnn = get(kSpanCnnName);
  const EvalReport& no_global = get(kNoGlobalName);
  const EvalReport& no_shared = get(kNoSharedName);

  Comparison out;
  for (const auto& f : gl.features) {
    const Dimension d = f.scores.dimension;
    auto micro = [&](const EvalReport& r) {
      const FeatureSection* s = r.Find(d);
      if (s == nullptr) {
        throw std::invalid_argument("compare_models: model '" + r.model + "' lacks dimension " +
                                    std::string(DimensionName(d)));
      }
      return s->scores.micro.f1;
    };
    ComparisonRow row;
    row.dimension = d;
    row.global_local = f.scores.micro.f1;
    row.span_cnn = micro(cnn);
    row.no_global = micro(no_global);
    row.no_shared = micro(no_shared);
    row.delta_span_cnn = row.global_local - row.span_cnn;
    row.delta_no_global = row.global_local - row.no_global;
    row.delta_no_shared = row.global_local - row.no_shared;
    row.beats_span_cnn = row.delta_span_cnn >= kOrderingMargin;
    row.beats_no_global = row.delta_no_global >= kOrderingMargin;
    const bool between = row.no_shared >= row.span_cnn && row.no_shared <= row.global_local;
    row.no_shared_ok = between || row.delta_no_shared <= kNoSharedTolerance;
    out.rows.push_back(row);
  }
  return out;
}

std::string Comparison::ToText() const {
  std::ostringstream out;
  out << "feature                 global-local  span-cnn  no-global  no-shared   d(cnn)  d(no-glob)"
         "  d(no-shr)  verdict\n";
  for (const auto& r : rows) {
    std::string name(DimensionName(r.dimension));
    name.resize(22, ' ');
    out << name << "  " << Score(r.global_local) << "      " << Score(r.span_cnn) << "    "
        << Score(r.no_global) << "     " << Score(r.no_shared) << "   "
        << Fixed(100 * r.delta_span_cnn) << "     " << Fixed(100 * r.delta_no_global)
        << "     " << Fixed(100 * r.delta_no_shared) << "  " << (r.pass() ? "PASS" : "FAIL")
        << '\n';
  }
  out << "ordering verdict: " << (pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::ordered_json Comparison::ToJson() const {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["dimension"] = std::string(DimensionName(r.dimension));
    j["global_local"] = r.global_local;
    j["span_cnn"] = r.span_cnn;
    j["no_global"] = r.no_global;
    j["no_shared"] = r.no_shared;
    j["delta_span_cnn"] = r.delta_span_cnn;
    j["delta_no_global"] = r.delta_no_global;
    j["delta_no_shared"] = r.delta_no_shared;
    j["pass"] = r.pass();
    rows_json.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["rows"] = std::move(rows_json);
  j["pass"] = pass();
  return j;
}

}  // namespace spanfeat
