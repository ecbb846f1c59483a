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

#include "spanfeat/data/vocabulary.h"

#include <algorithm>
#include <stdexcept>

namespace spanfeat {

Vocabulary::Vocabulary() {
  Add(kPaddingToken);
  Add(kUnknownToken);
}

Vocabulary Vocabulary::FromTokens(const std::vector<std::string>& tokens) {
  if (tokens.size() < 2 || tokens[0] != kPaddingToken ||
      tokens[1] != kUnknownToken) {
    throw std::invalid_argument("vocabulary must start with <pad>, <unk>");
  }
  Vocabulary v;
  for (size_t i = 2; i < tokens.size(); ++i) {
    if (v.Contains(tokens[i])) {
      throw std::invalid_argument("duplicate vocabulary entry: " + tokens[i]);
    }
    v.Add(tokens[i]);
  }
  return v;
}

int Vocabulary::Add(std::string_view token) {
  auto it = index_.find(std::string(token));
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

int Vocabulary::Lookup(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? kUnknown : it->second;
}

bool Vocabulary::Contains(std::string_view token) const {
  return index_.count(std::string(token)) > 0;
}

Vocabulary VocabularyBuilder::Build(int min_count) const {
  std::vector<std::pair<std::string, int>> kept;
  for (const auto& [token, count] : counts_) {
    if (count >= min_count) kept.emplace_back(token, count);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  Vocabulary v;
  for (const auto& [token, count] : kept) v.Add(token);
  return v;
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> SplitCharacters(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    size_t len = 1;
    if ((lead & 0xE0) == 0xC0) {
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
    }
    bool well_formed = i + len <= text.size();
    for (size_t k = 1; well_formed && k < len; ++k) {
      well_formed = (static_cast<unsigned char>(text[i + k]) & 0xC0) == 0x80;
    }
    if (!well_formed) len = 1;
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace spanfeat
