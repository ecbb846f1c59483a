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

#ifndef SPANFEAT_DATA_IOBES_H_
#define SPANFEAT_DATA_IOBES_H_

#include <string>
#include <string_view>
#include <vector>

#include "spanfeat/data/utterance.h"

namespace spanfeat {

// Per-token tags: "O" or one of "B-x", "I-x", "E-x", "S-x".
using TagSequence = std::vector<std::string>;

// Length-1 spans become S-, longer spans B- I* E-, uncovered tokens O.
// Throws DataError on overlapping or out-of-range spans.
TagSequence EncodeIobes(const std::vector<LabeledSpan>& spans, int num_tokens);

struct DecodedSpans {
  std::vector<LabeledSpan> spans;
  // Number of ill-formed transitions that had to be closed or opened.
  int repair_count = 0;
};

// Total: never throws. Valid sequences decode exactly; a dangling span is
// closed at the violation point and counted as one repair.
DecodedSpans DecodeIobes(const TagSequence& tags);

bool IsValidIobes(const TagSequence& tags);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_IOBES_H_
