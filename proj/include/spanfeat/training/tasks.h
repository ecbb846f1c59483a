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

#ifndef SPANFEAT_TRAINING_TASKS_H_
#define SPANFEAT_TRAINING_TASKS_H_

#include <vector>

#include "spanfeat/data/utterance.h"
#include "spanfeat/models/classifier.h"
#include "spanfeat/models/sequence_tagger.h"
#include "spanfeat/training/trainer.h"

namespace spanfeat {

// Gold tagging targets for `tagger`'s role: intent spans for the intent
// tagger, the dimension's feature spans otherwise (with intent boundaries
// as input for the cascaded tagger).
std::vector<TaggingExample> MakeTaggingExamples(const SequenceTagger& tagger,
                                                const Corpus& corpus);

// Dev metric: exact-span F1. Train accuracy: token-level tag accuracy.
class TaggerTask : public TrainingTask {
 public:
  TaggerTask(SequenceTagger& model, std::vector<TaggingExample> train,
             std::vector<TaggingExample> dev);

  ParameterStore& params() override { return model_.params(); }
  size_t num_examples() const override { return train_.size(); }
  Var Loss(Tape& tape, size_t example) const override;
  std::optional<double> DevMetric() const override;
  double TrainAccuracy() const override;
  void Finish() override { model_.MarkTrained(); }

 private:
  SequenceTagger& model_;
  std::vector<TaggingExample> train_;
  std::vector<TaggingExample> dev_;
};

// Dev metric and train accuracy: fraction of spans labelled correctly.
class ClassifierTask : public TrainingTask {
 public:
  ClassifierTask(SpanClassifier& model, std::vector<MaskedExample> train,
                 std::vector<MaskedExample> dev);

  ParameterStore& params() override { return model_.params(); }
  size_t num_examples() const override { return train_.size(); }
  Var Loss(Tape& tape, size_t example) const override;
  std::optional<double> DevMetric() const override;
  double TrainAccuracy() const override;
  void Finish() override { model_.MarkTrained(); }

 private:
  SpanClassifier& model_;
  std::vector<MaskedExample> train_;
  std::vector<MaskedExample> dev_;
};

double TokenAccuracy(const SequenceTagger& model, const std::vector<TaggingExample>& data);
double TaggerSpanF1(const SequenceTagger& model, const std::vector<TaggingExample>& data);
double ClassifierAccuracy(const SpanClassifier& model,
                          const std::vector<MaskedExample>& data);

}  // namespace spanfeat

#endif  // SPANFEAT_TRAINING_TASKS_H_
