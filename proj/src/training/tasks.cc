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

#include "spanfeat/training/tasks.h"

#include "spanfeat/data/iobes.h"
#include "spanfeat/eval/metrics.h"

namespace spanfeat {

std::vector<TaggingExample> MakeTaggingExamples(const SequenceTagger& tagger,
                                                const Corpus& corpus) {
  std::vector<TaggingExample> out;
  out.reserve(corpus.size());
  for (const auto& u : corpus) {
    const auto intents = IntentLabels(u);
    if (!tagger.dimension()) {
      out.push_back(tagger.MakeExample(u.tokens, intents, {}));
    } else {
      out.push_back(
          tagger.MakeExample(u.tokens, FeatureSpans(u, *tagger.dimension()), intents));
    }
  }
  return out;
}

double TokenAccuracy(const SequenceTagger& model, const std::vector<TaggingExample>& data) {
  long correct = 0;
  long total = 0;
  for (const auto& ex : data) {
    const auto pred = model.DecodeIndices(ex.tokens, ex.boundaries);
    for (size_t i = 0; i < pred.size(); ++i) correct += pred[i] == ex.gold[i];
    total += static_cast<long>(pred.size());
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / total;
}

double TaggerSpanF1(const SequenceTagger& model, const std::vector<TaggingExample>& data) {
  std::vector<std::vector<LabeledSpan>> pred, gold;
  pred.reserve(data.size());
  gold.reserve(data.size());
  for (const auto& ex : data) {
    pred.push_back(model.Tag(ex.tokens, ex.boundaries));
    gold.push_back(DecodeIobes(model.tag_set().Tags(ex.gold)).spans);
  }
  return SpanF1(pred, gold).f1;
}

double ClassifierAccuracy(const SpanClassifier& model,
                          const std::vector<MaskedExample>& data) {
  if (data.empty()) return 0.0;
  int correct = 0;
  for (const auto& ex : data) correct += model.PredictIndex(ex.tokens, ex.mask) == ex.gold;
  return static_cast<double>(correct) / data.size();
}

TaggerTask::TaggerTask(SequenceTagger& model, std::vector<TaggingExample> train,
                       std::vector<TaggingExample> dev)
    : model_(model), train_(std::move(train)), dev_(std::move(dev)) {}

Var TaggerTask::Loss(Tape& tape, size_t example) const {
  return model_.Loss(tape, train_.at(example));
}

std::optional<double> TaggerTask::DevMetric() const {
  if (dev_.empty()) return std::nullopt;
  return TaggerSpanF1(model_, dev_);
}

double TaggerTask::TrainAccuracy() const { return TokenAccuracy(model_, train_); }

ClassifierTask::ClassifierTask(SpanClassifier& model, std::vector<MaskedExample> train,
                               std::vector<MaskedExample> dev)
    : model_(model), train_(std::move(train)), dev_(std::move(dev)) {}

Var ClassifierTask::Loss(Tape& tape, size_t example) const {
  return model_.Loss(tape, train_.at(example));
}

std::optional<double> ClassifierTask::DevMetric() const {
  if (dev_.empty()) return std::nullopt;
  return ClassifierAccuracy(model_, dev_);
}

double ClassifierTask::TrainAccuracy() const { return ClassifierAccuracy(model_, train_); }

}  // namespace spanfeat
