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

#include "spanfeat/models/bundle.h"

#include <fstream>
#include <optional>
#include <set>

#include "spanfeat/models/global_local.h"
#include "spanfeat/models/sequence_tagger.h"
#include "spanfeat/models/span_cnn.h"

namespace spanfeat {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json EncoderJson(const EncoderConfig& c) {
  ordered_json j;
  j["word_embedding_dims"] = c.word_embedding_dims;
  j["char_embedding_dim"] = c.char_embedding_dim;
  j["char_filters"] = c.char_filters;
  j["char_filter_width"] = c.char_filter_width;
  j["lstm_hidden"] = c.lstm_hidden;
  return j;
}

EncoderConfig EncoderFromJson(const json& j) {
  EncoderConfig c;
  c.word_embedding_dims = j.at("word_embedding_dims").get<std::vector<int>>();
  c.char_embedding_dim = j.at("char_embedding_dim").get<int>();
  c.char_filters = j.at("char_filters").get<int>();
  c.char_filter_width = j.at("char_filter_width").get<int>();
  c.lstm_hidden = j.at("lstm_hidden").get<int>();
  return c;
}

template <typename Config>
ordered_json PoolingJson(const Config& c) {
  ordered_json j;
  j["word_embedding_dims"] = c.word_embedding_dims;
  j["filter_widths"] = c.filter_widths;
  j["filters_per_width"] = c.filters_per_width;
  return j;
}

template <typename Config>
void PoolingFromJson(const json& j, Config& c) {
  c.word_embedding_dims = j.at("word_embedding_dims").get<std::vector<int>>();
  c.filter_widths = j.at("filter_widths").get<std::vector<int>>();
  c.filters_per_width = j.at("filters_per_width").get<int>();
}

void LoadParameters(const json& entries, ParameterStore& store) {
  if (!entries.is_array()) throw BundleError("bundle parameters must be an array");
  std::set<std::string> seen;
  for (const json& e : entries) {
    const std::string name = e.at("name").get<std::string>();
    Tensor* t = store.Find(name);
    if (t == nullptr) throw BundleError("unexpected parameter tensor '" + name + "'");
    if (!seen.insert(name).second) {
      throw BundleError("duplicate parameter tensor '" + name + "'");
    }
    const auto shape = e.at("shape").get<std::vector<int>>();
    if (shape != t->shape()) {
      throw BundleError("shape mismatch for tensor '" + name + "': bundle has " +
                        ShapeToString(shape) + ", model expects " + t->ShapeString());
    }
    const auto& values = e.at("values");
    if (!values.is_array() || values.size() != t->size()) {
      throw BundleError("value count mismatch for tensor '" + name + "'");
    }
    auto dst = t->values();
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = values[i].get<double>();
  }
  for (size_t i = 0; i < store.size(); ++i) {
    if (!seen.count(store.name(i))) {
      throw BundleError("bundle is missing tensor '" + store.name(i) + "'");
    }
  }
}

}  // namespace

ordered_json ModelToJson(const Model& model) {
  ordered_json j;
  j["format_version"] = kBundleFormatVersion;
  j["architecture"] = std::string(ArchitectureTag(model.architecture()));

  if (const auto* tagger = dynamic_cast<const SequenceTagger*>(&model)) {
    j["dimension"] = tagger->dimension()
                         ? json(std::string(DimensionName(*tagger->dimension())))
                         : json(nullptr);
    j["labels"] = tagger->tag_set().labels();
    j["seed"] = tagger->seed();
    ordered_json config;
    config["encoder"] = EncoderJson(tagger->config().encoder);
    config["boundary_dim"] = tagger->config().boundary_dim;
    config["constrain_training"] = tagger->config().constrain_training;
    j["config"] = config;
    j["vocabularies"] = {{"words", tagger->encoder().words().tokens()},
                         {"chars", tagger->encoder().chars().tokens()}};
  } else if (const auto* classifier = dynamic_cast<const SpanClassifier*>(&model)) {
    j["dimension"] = std::string(DimensionName(classifier->dimension()));
    j["labels"] = classifier->labels();
    j["seed"] = classifier->seed();
    if (const auto* cnn = dynamic_cast<const SpanCnn*>(classifier)) {
      j["config"] = PoolingJson(cnn->config());
    } else {
      const auto& c = dynamic_cast<const GlobalLocal&>(*classifier).config();
      ordered_json config = PoolingJson(c);
      config["share_encoder_embedding"] = c.share_encoder_embedding;
      config["use_global_context"] = c.use_global_context;
      config["share_pooling_params"] = c.share_pooling_params;
      j["config"] = config;
    }
    j["vocabularies"] = {{"words", classifier->words().tokens()}};
  } else {
    throw BundleError("cannot serialize model of unknown type");
  }

  ordered_json params = ordered_json::array();
  const ParameterStore& store = model.params();
  for (size_t i = 0; i < store.size(); ++i) {
    const Tensor& t = store.tensor(i);
    ordered_json p;
    p["name"] = store.name(i);
    p["shape"] = t.shape();
    const auto values = t.values();
    p["values"] = std::vector<double>(values.begin(), values.end());
    params.push_back(std::move(p));
  }
  j["parameters"] = std::move(params);
  return j;
}

std::unique_ptr<Model> ModelFromJson(const json& j) {
  std::unique_ptr<Model> model;
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kBundleFormatVersion) {
      throw BundleError("unsupported bundle format_version " + std::to_string(version) +
                        " (expected " + std::to_string(kBundleFormatVersion) + ")");
    }
    const std::string tag = j.at("architecture").get<std::string>();
    Architecture arch;
    try {
      arch = ParseArchitecture(tag);
    } catch (const std::exception&) {
      throw BundleError("unknown architecture tag '" + tag + "'");
    }
    std::optional<Dimension> dimension;
    if (!j.at("dimension").is_null()) {
      dimension = ParseDimension(j.at("dimension").get<std::string>());
    }
    const auto seed = j.at("seed").get<std::uint64_t>();
    const json& config = j.at("config");
    const json& vocabs = j.at("vocabularies");
    Vocabulary words = Vocabulary::FromTokens(vocabs.at("words").get<std::vector<std::string>>());

    switch (arch) {
      case Architecture::kIntentTagger:
      case Architecture::kFeatureTaggerFlat:
      case Architecture::kFeatureTaggerCascaded: {
        TaggerConfig c;
        c.encoder = EncoderFromJson(config.at("encoder"));
        c.boundary_dim = config.at("boundary_dim").get<int>();
        c.constrain_training = config.at("constrain_training").get<bool>();
        Vocabulary chars =
            Vocabulary::FromTokens(vocabs.at("chars").get<std::vector<std::string>>());
        model = std::make_unique<SequenceTagger>(
            arch, dimension, j.at("labels").get<std::vector<std::string>>(), c,
            std::move(words), std::move(chars), seed);
        break;
      }
      case Architecture::kSpanCnn: {
        if (!dimension) throw BundleError("span-cnn bundle lacks a dimension");
        SpanCnnConfig c;
        PoolingFromJson(config, c);
        model = std::make_unique<SpanCnn>(*dimension, c, std::move(words), seed);
        break;
      }
      case Architecture::kGlobalLocal: {
        if (!dimension) throw BundleError("global-local bundle lacks a dimension");
        GlobalLocalConfig c;
        PoolingFromJson(config, c);
        c.share_encoder_embedding = config.at("share_encoder_embedding").get<bool>();
        c.use_global_context = config.at("use_global_context").get<bool>();
        c.share_pooling_params = config.at("share_pooling_params").get<bool>();
        model = std::make_unique<GlobalLocal>(*dimension, c, std::move(words), seed);
        break;
      }
    }
    LoadParameters(j.at("parameters"), model->params());
  } catch (const json::exception& e) {
    throw BundleError(std::string("malformed model bundle: ") + e.what());
  }
  model->MarkTrained();
  return model;
}

void SaveModel(const Model& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BundleError("cannot open " + path + " for writing");
  out << ModelToJson(model).dump() << '\n';
  if (!out) throw BundleError("failed writing " + path);
}

std::unique_ptr<Model> LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BundleError("cannot open model bundle " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw BundleError(path + ": " + e.what());
  }
  try {
    return ModelFromJson(j);
  } catch (const BundleError& e) {
    throw BundleError(path + ": " + e.what());
  }
}

}  // namespace spanfeat
