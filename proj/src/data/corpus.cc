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

#include "spanfeat/data/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace spanfeat {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& Field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw DataError(std::string("missing field '") + key + "'");
  }
  return *it;
}

int IntField(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_number_integer()) {
    throw DataError(std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

std::string StringField(const json& object, const char* key) {
  const json& v = Field(object, key);
  if (!v.is_string()) {
    throw DataError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

IntentSpan ParseSpan(const json& record) {
  if (!record.is_object()) throw DataError("span must be an object");
  IntentSpan span;
  span.start = IntField(record, "start");
  span.end = IntField(record, "end");
  span.intent = StringField(record, "intent");
  const json& features = Field(record, "features");
  if (!features.is_object()) throw DataError("'features' must be an object");
  for (const auto& [key, value] : features.items()) {
    Dimension d = ParseDimension(key);
    if (!value.is_string()) {
      throw DataError("feature '" + key + "' must be a string");
    }
    span.feature(d) = value.get<std::string>();
  }
  return span;
}

}  // namespace

CorpusError::CorpusError(const std::string& source, int line,
                         const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

AnnotatedUtterance ParseRecord(std::string_view json_line) {
  json record;
  try {
    record = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) throw DataError("record must be a JSON object");
  AnnotatedUtterance utterance;
  const json& tokens = Field(record, "tokens");
  if (!tokens.is_array()) throw DataError("'tokens' must be an array");
  for (const json& t : tokens) {
    if (!t.is_string()) throw DataError("tokens must be strings");
    utterance.tokens.push_back(t.get<std::string>());
  }
  const json& spans = Field(record, "spans");
  if (!spans.is_array()) throw DataError("'spans' must be an array");
  for (const json& s : spans) {
    try {
      utterance.spans.push_back(ParseSpan(s));
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
  }
  ValidateUtterance(utterance);
  return utterance;
}

std::string FormatRecord(const AnnotatedUtterance& utterance) {
  ordered_json record;
  record["tokens"] = utterance.tokens;
  record["spans"] = ordered_json::array();
  for (const IntentSpan& s : utterance.spans) {
    ordered_json span;
    span["start"] = s.start;
    span["end"] = s.end;
    span["intent"] = s.intent;
    ordered_json features = ordered_json::object();
    for (Dimension d : kAllDimensions) {
      features[std::string(DimensionName(d))] = s.feature(d);
    }
    span["features"] = std::move(features);
    record["spans"].push_back(std::move(span));
  }
  return record.dump();
}

Corpus ReadCorpus(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      corpus.push_back(ParseRecord(line));
    } catch (const std::invalid_argument& e) {
      throw CorpusError(source_name, line_number, e.what());
    }
  }
  return corpus;
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& u : corpus) out << FormatRecord(u) << '\n';
}

Corpus LoadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return ReadCorpus(in, path);
}

void SaveCorpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path);
  WriteCorpus(corpus, out);
  if (!out) throw std::runtime_error("error writing corpus file: " + path);
}

}  // namespace spanfeat
