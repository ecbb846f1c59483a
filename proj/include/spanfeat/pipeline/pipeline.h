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

#ifndef SPANFEAT_PIPELINE_PIPELINE_H_
#define SPANFEAT_PIPELINE_PIPELINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "spanfeat/data/utterance.h"
#include "spanfeat/eval/report.h"
#include "spanfeat/models/global_local.h"
#include "spanfeat/models/sequence_tagger.h"
#include "spanfeat/models/span_cnn.h"
#include "spanfeat/training/trainer.h"

namespace spanfeat {

// Everything needed to train any of the architectures. Taggers use SGD
// with momentum and gradient clipping, classifiers Adadelta, unless
// `optimizer` overrides both.
struct TrainOptions {
  TaggerConfig tagger;
  SpanCnnConfig span_cnn;
  GlobalLocalConfig global_local;
  SgdMomentumConfig sgd;
  AdadeltaConfig adadelta;
  std::optional<OptimizerConfig> optimizer;
  int epochs = 30;
  std::uint64_t seed = 7;
  double tagger_clip_norm = 5.0;
  int word_min_count = 2;
  bool keep_best = true;
  bool track_train_accuracy = false;
};

struct TrainedModel {
  std::unique_ptr<Model> model;
  TrainingHistory history;
};

// `dimension` must be empty for the intent tagger and set otherwise.
// Vocabularies come from `train`; `dev` may be empty.
TrainedModel TrainModel(Architecture architecture, std::optional<Dimension> dimension,
                        const Corpus& train, const Corpus& dev, const TrainOptions& options,
                        const EpochCallback& on_epoch = {});

// Architecture tag, with "-no-global", "-no-shared" and "-shared-pooling"
// suffixes for Global-Local variants.
std::string ModelName(const Model& model);

struct EvalOptions {
  std::string corpus = "test";
  // Feed predicted intent spans (from `intent_tagger`) to span-consuming
  // feature models instead of gold spans. Labels are still scored against
  // the gold spans, each taking the label of its best-overlapping
  // predicted span.
  bool pipeline = false;
  const SequenceTagger* intent_tagger = nullptr;
};

EvalReport EvaluateModel(const Model& model, const Corpus& test, const EvalOptions& options);

// Per-span labels for one feature model over `spans` of one utterance.
std::vector<std::string> PredictFeatureLabels(const Model& model,
                                              const std::vector<std::string>& tokens,
                                              const std::vector<LabeledSpan>& spans);

// Fills in what `model` predicts: intent spans for the intent tagger (with
// default features), otherwise the model's dimension on the existing spans
// (or on spans from `intent_tagger` when given).
Corpus AnnotateCorpus(const Model& model, const Corpus& input,
                      const SequenceTagger* intent_tagger = nullptr);

}  // namespace spanfeat

#endif  // SPANFEAT_PIPELINE_PIPELINE_H_
