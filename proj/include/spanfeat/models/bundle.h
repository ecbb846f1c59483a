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

#ifndef SPANFEAT_MODELS_BUNDLE_H_
#define SPANFEAT_MODELS_BUNDLE_H_

#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spanfeat/models/model.h"

namespace spanfeat {

inline constexpr int kBundleFormatVersion = 1;

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-describing JSON bundle: format_version, architecture, dimension,
// labels, seed, config, vocabularies and every parameter tensor with its
// shape. Doubles are written in shortest round-trip form, so load followed
// by save reproduces the file byte for byte.
nlohmann::ordered_json ModelToJson(const Model& model);
// The returned model is marked trained.
std::unique_ptr<Model> ModelFromJson(const nlohmann::json& bundle);

void SaveModel(const Model& model, const std::string& path);
std::unique_ptr<Model> LoadModel(const std::string& path);

}  // namespace spanfeat

#endif  // SPANFEAT_MODELS_BUNDLE_H_
