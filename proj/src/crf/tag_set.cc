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

#include "spanfeat/crf/tag_set.h"

#include <stdexcept>

namespace spanfeat {

TagSet::TagSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  tags_.push_back("O");
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("tag set labels must be non-empty");
    for (const char* p : {"B-", "I-", "E-", "S-"}) tags_.push_back(p + l);
  }
}

int TagSet::Index(std::string_view tag) const {
  for (size_t i = 0; i < tags_.size(); ++i) {
    if (tags_[i] == tag) return static_cast<int>(i);
  }
  throw std::invalid_argument("tag '" + std::string(tag) + "' not in tag set");
}

std::vector<int> TagSet::Indices(const TagSequence& tags) const {
  std::vector<int> out;
  out.reserve(tags.size());
  for (const auto& t : tags) out.push_back(Index(t));
  return out;
}

TagSequence TagSet::Tags(const std::vector<int>& indices) const {
  TagSequence out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(Tag(i));
  return out;
}

ConstraintMask::ConstraintMask(int num_tags, bool allow_all)
    : num_tags_(num_tags),
      allowed_(static_cast<size_t>(num_tags + 2) * (num_tags + 2), 0) {
  if (num_tags < 1) throw std::invalid_argument("constraint mask needs >= 1 tag");
  if (!allow_all) return;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      // Nothing enters START and nothing leaves END.
      if (j != start() && i != end() && !(i == start() && j == end())) set(i, j, true);
    }
  }
}

int ConstraintMask::CountAllowed() const {
  int count = 0;
  for (char a : allowed_) count += a;
  return count;
}

bool ConstraintMask::IsLegalPath(const std::vector<int>& path) const {
  if (path.empty()) return false;
  int previous = start();
  for (int t : path) {
    if (t < 0 || t >= num_tags_ || !allowed(previous, t)) return false;
    previous = t;
  }
  return allowed(previous, end());
}

ConstraintMask BuildIobesConstraints(const TagSet& tags) {
  ConstraintMask mask(tags.size());
  const int num_labels = static_cast<int>(tags.labels().size());
  const int o = TagSet::kOutside;
  // Sources that may be followed by a fresh span, O, or END.
  std::vector<int> span_boundaries = {mask.start(), o};
  for (int k = 0; k < num_labels; ++k) {
    span_boundaries.push_back(tags.End(k));
    span_boundaries.push_back(tags.Single(k));
  }
  for (int from : span_boundaries) {
    mask.set(from, o, true);
    for (int k = 0; k < num_labels; ++k) {
      mask.set(from, tags.Begin(k), true);
      mask.set(from, tags.Single(k), true);
    }
    if (from != mask.start()) mask.set(from, mask.end(), true);
  }
  for (int k = 0; k < num_labels; ++k) {
    for (int from : {tags.Begin(k), tags.Inside(k)}) {
      mask.set(from, tags.Inside(k), true);
      mask.set(from, tags.End(k), true);
    }
  }
  return mask;
}

}  // namespace spanfeat
