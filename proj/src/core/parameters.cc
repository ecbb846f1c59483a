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

#include "spanfeat/core/parameters.h"

#include <cmath>
#include <stdexcept>

namespace spanfeat {

Tensor& ParameterStore::Create(const std::string& name, std::vector<int> shape) {
  if (Find(name) != nullptr) {
    throw std::invalid_argument("duplicate parameter name: " + name);
  }
  entries_.emplace_back(name, std::make_unique<Tensor>(std::move(shape)));
  return *entries_.back().second;
}

Tensor* ParameterStore::Find(const std::string& name) {
  for (auto& [n, t] : entries_) {
    if (n == name) return t.get();
  }
  return nullptr;
}

const Tensor* ParameterStore::Find(const std::string& name) const {
  for (const auto& [n, t] : entries_) {
    if (n == name) return t.get();
  }
  return nullptr;
}

Tensor& ParameterStore::Get(const std::string& name) {
  Tensor* t = Find(name);
  if (t == nullptr) throw std::out_of_range("unknown parameter: " + name);
  return *t;
}

size_t ParameterStore::NumValues() const {
  size_t n = 0;
  for (const auto& e : entries_) n += e.second->size();
  return n;
}

void ParameterStore::ZeroGrad() {
  for (auto& e : entries_) e.second->ZeroGrad();
}

std::vector<std::vector<double>> ParameterStore::Snapshot() const {
  std::vector<std::vector<double>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    auto v = e.second->values();
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

void ParameterStore::Restore(const std::vector<std::vector<double>>& snapshot) {
  if (snapshot.size() != entries_.size()) {
    throw std::invalid_argument("snapshot does not match parameter store");
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    auto dst = entries_[i].second->values();
    if (dst.size() != snapshot[i].size()) {
      throw std::invalid_argument("snapshot size mismatch for " +
                                  entries_[i].first);
    }
    std::copy(snapshot[i].begin(), snapshot[i].end(), dst.begin());
  }
}

void InitGlorotUniform(Tensor& t, int fan_in, int fan_out, Rng& rng) {
  InitUniform(t, std::sqrt(6.0 / (fan_in + fan_out)), rng);
}

void InitUniform(Tensor& t, double limit, Rng& rng) {
  std::uniform_real_distribution<double> dist(-limit, limit);
  for (double& v : t.values()) v = dist(rng);
}

}  // namespace spanfeat
