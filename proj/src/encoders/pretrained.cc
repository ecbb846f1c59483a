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

#include "spanfeat/encoders/pretrained.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spanfeat {

PretrainedEmbeddings ReadPretrainedEmbeddings(std::istream& in) {
  PretrainedEmbeddings out;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("pretrained embeddings: missing header line");
  }
  long count = 0;
  {
    std::istringstream header(line);
    if (!(header >> count >> out.dim) || count < 0 || out.dim < 1) {
      throw std::runtime_error("pretrained embeddings: bad header '" + line + "'");
    }
  }
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string token;
    fields >> token;
    std::vector<double> v;
    v.reserve(out.dim);
    double x;
    while (fields >> x) v.push_back(x);
    if (static_cast<int>(v.size()) != out.dim) {
      throw std::runtime_error("pretrained embeddings: line " +
                               std::to_string(line_number) + " has " +
                               std::to_string(v.size()) + " values, expected " +
                               std::to_string(out.dim));
    }
    out.vectors[token] = std::move(v);
  }
  if (static_cast<long>(out.vectors.size()) != count) {
    throw std::runtime_error("pretrained embeddings: header declares " +
                             std::to_string(count) + " vectors, found " +
                             std::to_string(out.vectors.size()));
  }
  return out;
}

PretrainedEmbeddings LoadPretrainedEmbeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embeddings file: " + path);
  return ReadPretrainedEmbeddings(in);
}

int ApplyPretrainedEmbeddings(const PretrainedEmbeddings& pretrained,
                              const Vocabulary& vocabulary, Tensor& table) {
  if (table.rank() != 2 || table.dim(0) != vocabulary.size() ||
      table.dim(1) != pretrained.dim) {
    throw ShapeError("pretrained dim " + std::to_string(pretrained.dim) +
                     " does not fit table " + table.ShapeString());
  }
  int applied = 0;
  for (int i = 2; i < vocabulary.size(); ++i) {
    auto it = pretrained.vectors.find(Lowercase(vocabulary.Token(i)));
    if (it == pretrained.vectors.end()) continue;
    std::copy(it->second.begin(), it->second.end(), table.row(i).begin());
    ++applied;
  }
  return applied;
}

}  // namespace spanfeat
