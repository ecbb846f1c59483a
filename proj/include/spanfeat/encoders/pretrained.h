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

#ifndef SPANFEAT_ENCODERS_PRETRAINED_H_
#define SPANFEAT_ENCODERS_PRETRAINED_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "spanfeat/core/tensor.h"
#include "spanfeat/data/vocabulary.h"

namespace spanfeat {

// Word vectors in the plain text format: a "count dim" header line followed
// by one "token v1 ... vdim" line per word.
struct PretrainedEmbeddings {
  int dim = 0;
  std::unordered_map<std::string, std::vector<double>> vectors;
};

PretrainedEmbeddings ReadPretrainedEmbeddings(std::istream& in);
PretrainedEmbeddings LoadPretrainedEmbeddings(const std::string& path);

// Overwrites rows of `table` [V x dim] for vocabulary entries that have a
// pretrained vector (looked up lowercased). Returns the number of rows set.
int ApplyPretrainedEmbeddings(const PretrainedEmbeddings& pretrained,
                              const Vocabulary& vocabulary, Tensor& table);

}  // namespace spanfeat

#endif  // SPANFEAT_ENCODERS_PRETRAINED_H_
