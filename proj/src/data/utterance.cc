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

#include "spanfeat/data/utterance.h"

#include <string>

namespace spanfeat {
namespace {

std::string Range(int start, int end) {
  return "[" + std::to_string(start) + ", " + std::to_string(end) + ")";
}

template <typename Span>
void CheckLayout(const std::vector<Span>& spans, int n) {
  int previous_end = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    const Span& s = spans[i];
    if (s.start < 0 || s.start >= s.end || s.end > n) {
      throw DataError("span " + Range(s.start, s.end) + " out of range for " +
                      std::to_string(n) + " tokens");
    }
    if (i > 0 && s.start < spans[i - 1].start) {
      throw DataError("spans not sorted by start at " + Range(s.start, s.end));
    }
    if (i > 0 && s.start < previous_end) {
      throw DataError("overlapping spans " +
                      Range(spans[i - 1].start, spans[i - 1].end) + " and " +
                      Range(s.start, s.end));
    }
    previous_end = s.end;
  }
}

}  // namespace

void ValidateSpans(const std::vector<LabeledSpan>& spans, int num_tokens) {
  CheckLayout(spans, num_tokens);
}

void ValidateUtterance(const AnnotatedUtterance& utterance) {
  if (utterance.tokens.empty()) throw DataError("utterance has no tokens");
  for (const auto& token : utterance.tokens) {
    if (token.empty()) throw DataError("empty token");
  }
  CheckLayout(utterance.spans, static_cast<int>(utterance.tokens.size()));
  for (const IntentSpan& s : utterance.spans) {
    if (s.intent.empty()) {
      throw DataError("span " + Range(s.start, s.end) + " has no intent");
    }
    for (Dimension d : kAllDimensions) {
      const std::string& label = s.feature(d);
      if (label.empty()) {
        throw DataError("span " + Range(s.start, s.end) + " lacks feature " +
                        std::string(DimensionName(d)));
      }
      if (FindLabel(d, label) < 0) {
        throw DataError("unknown " + std::string(DimensionName(d)) +
                        " label '" + label + "'");
      }
    }
  }
}

std::vector<int> MaskedExample::SpanPositions() const {
  std::vector<int> out;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::string> MaskedExample::SpanTokens() const {
  std::vector<std::string> out;
  for (int i : SpanPositions()) out.push_back(tokens[i]);
  return out;
}

void MaskedExample::Validate() const {
  if (tokens.empty()) throw DataError("masked example has no tokens");
  if (mask.size() != tokens.size()) {
    throw DataError("mask length " + std::to_string(mask.size()) +
                    " differs from token count " + std::to_string(tokens.size()));
  }
  for (auto bit : mask) {
    if (bit != 0) return;
  }
  throw DataError("mask has no set bit");
}

MaskedExample MakeMaskedExample(const AnnotatedUtterance& utterance,
                                const IntentSpan& span, Dimension dimension) {
  MaskedExample ex;
  ex.tokens = utterance.tokens;
  ex.mask.assign(utterance.tokens.size(), 0);
  for (int i = span.start; i < span.end; ++i) ex.mask[i] = 1;
  ex.gold = FindLabel(dimension, span.feature(dimension));
  return ex;
}

std::vector<MaskedExample> MakeMaskedExamples(const Corpus& corpus,
                                              Dimension dimension) {
  std::vector<MaskedExample> out;
  for (const auto& u : corpus) {
    for (const auto& s : u.spans) out.push_back(MakeMaskedExample(u, s, dimension));
  }
  return out;
}

std::vector<LabeledSpan> IntentLabels(const AnnotatedUtterance& utterance) {
  std::vector<LabeledSpan> out;
  for (const auto& s : utterance.spans) out.push_back({s.start, s.end, s.intent});
  return out;
}

std::vector<LabeledSpan> FeatureSpans(const AnnotatedUtterance& utterance,
                                      Dimension dimension) {
  std::vector<LabeledSpan> out;
  for (const auto& s : utterance.spans) {
    out.push_back({s.start, s.end, s.feature(dimension)});
  }
  return out;
}

}  // namespace spanfeat
