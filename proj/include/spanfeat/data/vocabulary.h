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

#ifndef SPANFEAT_DATA_VOCABULARY_H_
#define SPANFEAT_DATA_VOCABULARY_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spanfeat {

// Bidirectional token <-> index map. Index 0 is padding, 1 is unknown.
class Vocabulary {
 public:
  static constexpr int kPadding = 0;
  static constexpr int kUnknown = 1;
  static constexpr std::string_view kPaddingToken = "<pad>";
  static constexpr std::string_view kUnknownToken = "<unk>";

  Vocabulary();

  // Rebuilds from a full index-ordered token list, reserved entries included.
  static Vocabulary FromTokens(const std::vector<std::string>& tokens);

  // Returns the existing index when already present.
  int Add(std::string_view token);
  int Lookup(std::string_view token) const;
  bool Contains(std::string_view token) const;
  const std::string& Token(int index) const { return tokens_.at(index); }
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

class VocabularyBuilder {
 public:
  void Count(std::string_view token) { ++counts_[std::string(token)]; }

  // Keeps tokens seen at least `min_count` times, most frequent first with
  // ties in lexicographic order.
  Vocabulary Build(int min_count) const;

 private:
  std::map<std::string, int> counts_;
};

// ASCII lowercasing; bytes >= 0x80 are left untouched.
std::string Lowercase(std::string_view text);

// Splits UTF-8 text into code points, each returned as its byte sequence.
// Malformed bytes are returned one at a time.
std::vector<std::string> SplitCharacters(std::string_view text);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_VOCABULARY_H_
