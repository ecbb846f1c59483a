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

#ifndef SPANFEAT_CRF_TAG_SET_H_
#define SPANFEAT_CRF_TAG_SET_H_

#include <string>
#include <string_view>
#include <vector>

#include "spanfeat/data/iobes.h"

namespace spanfeat {

// IOBES tags over an ordered label set. Index 0 is "O"; label k owns
// B = 1 + 4k, I = 2 + 4k, E = 3 + 4k, S = 4 + 4k.
class TagSet {
 public:
  static constexpr int kOutside = 0;

  explicit TagSet(std::vector<std::string> labels);

  int size() const { return 1 + 4 * static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& Tag(int index) const { return tags_.at(index); }
  // Throws std::invalid_argument for tags outside the set.
  int Index(std::string_view tag) const;

  std::vector<int> Indices(const TagSequence& tags) const;
  TagSequence Tags(const std::vector<int>& indices) const;

  int Begin(int label) const { return 1 + 4 * label; }
  int Inside(int label) const { return 2 + 4 * label; }
  int End(int label) const { return 3 + 4 * label; }
  int Single(int label) const { return 4 + 4 * label; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> tags_;
};

// allowed(i, j): transition i -> j is legal. Tag indices are 0..L-1, START
// is L and END is L+1.
class ConstraintMask {
 public:
  explicit ConstraintMask(int num_tags, bool allow_all = false);

  static ConstraintMask AllowAll(int num_tags) { return ConstraintMask(num_tags, true); }

  int num_tags() const { return num_tags_; }
  int start() const { return num_tags_; }
  int end() const { return num_tags_ + 1; }
  int dim() const { return num_tags_ + 2; }

  bool allowed(int from, int to) const { return allowed_[from * dim() + to] != 0; }
  void set(int from, int to, bool value) { allowed_[from * dim() + to] = value ? 1 : 0; }
  int CountAllowed() const;

  // Checks START -> path[0] -> ... -> path[T-1] -> END.
  bool IsLegalPath(const std::vector<int>& path) const;

 private:
  int num_tags_;
  std::vector<char> allowed_;
};

// START -> {O, B-x, S-x}; O -> {O, B-x, S-x, END}; B-x, I-x -> {I-x, E-x};
// E-x, S-x -> {O, B-y, S-y, END}. Everything else is illegal.
ConstraintMask BuildIobesConstraints(const TagSet& tags);

}  // namespace spanfeat

#endif  // SPANFEAT_CRF_TAG_SET_H_
