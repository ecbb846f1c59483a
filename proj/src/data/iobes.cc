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

#include "spanfeat/data/iobes.h"

#include <optional>

namespace spanfeat {
namespace {

struct ParsedTag {
  char prefix = 'O';
  std::string label;
};

// Anything that is not O or a recognized prefix followed by a non-empty
// label is treated as O.
ParsedTag Parse(std::string_view tag) {
  if (tag.size() >= 3 && tag[1] == '-') {
    char p = tag[0];
    if (p == 'B' || p == 'I' || p == 'E' || p == 'S') {
      return {p, std::string(tag.substr(2))};
    }
  }
  return {};
}

}  // namespace

TagSequence EncodeIobes(const std::vector<LabeledSpan>& spans, int num_tokens) {
  ValidateSpans(spans, num_tokens);
  TagSequence tags(num_tokens, "O");
  for (const LabeledSpan& s : spans) {
    if (s.length() == 1) {
      tags[s.start] = "S-" + s.label;
      continue;
    }
    tags[s.start] = "B-" + s.label;
    for (int i = s.start + 1; i < s.end - 1; ++i) tags[i] = "I-" + s.label;
    tags[s.end - 1] = "E-" + s.label;
  }
  return tags;
}

DecodedSpans DecodeIobes(const TagSequence& tags) {
  DecodedSpans out;
  struct Open {
    int start;
    std::string label;
  };
  std::optional<Open> open;
  auto close = [&](int end) {
    out.spans.push_back({open->start, end, open->label});
    open.reset();
  };
  const int n = static_cast<int>(tags.size());
  for (int t = 0; t < n; ++t) {
    ParsedTag tag = Parse(tags[t]);
    switch (tag.prefix) {
      case 'O':
        if (open) {
          close(t);
          ++out.repair_count;
        }
        break;
      case 'B':
        if (open) {
          close(t);
          ++out.repair_count;
        }
        open = Open{t, tag.label};
        break;
      case 'I':
        if (open && open->label == tag.label) break;
        if (open) close(t);
        open = Open{t, tag.label};
        ++out.repair_count;
        break;
      case 'E':
        if (open && open->label == tag.label) {
          close(t + 1);
          break;
        }
        if (open) close(t);
        out.spans.push_back({t, t + 1, tag.label});
        ++out.repair_count;
        break;
      case 'S':
        if (open) {
          close(t);
          ++out.repair_count;
        }
        out.spans.push_back({t, t + 1, tag.label});
        break;
    }
  }
  if (open) {
    close(n);
    ++out.repair_count;
  }
  return out;
}

bool IsValidIobes(const TagSequence& tags) {
  for (const auto& t : tags) {
    if (t != "O" && Parse(t).prefix == 'O') return false;
  }
  return DecodeIobes(tags).repair_count == 0;
}

}  // namespace spanfeat
