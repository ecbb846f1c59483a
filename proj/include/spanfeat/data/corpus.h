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

#ifndef SPANFEAT_DATA_CORPUS_H_
#define SPANFEAT_DATA_CORPUS_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spanfeat/data/utterance.h"

namespace spanfeat {

// Corpus files hold one JSON record per line:
//   {"tokens": [...], "spans": [{"start": 0, "end": 3, "intent": "install",
//     "features": {"attr_cf": "self", ...}}]}
// Blank lines are ignored.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

AnnotatedUtterance ParseRecord(std::string_view json_line);
std::string FormatRecord(const AnnotatedUtterance& utterance);

Corpus ReadCorpus(std::istream& in, const std::string& source_name);
void WriteCorpus(const Corpus& corpus, std::ostream& out);

Corpus LoadCorpus(const std::string& path);
void SaveCorpus(const Corpus& corpus, const std::string& path);

}  // namespace spanfeat

#endif  // SPANFEAT_DATA_CORPUS_H_
