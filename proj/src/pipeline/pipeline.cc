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

#include "spanfeat/pipeline/pipeline.h"

#include <algorithm>
#include <stdexcept>

#include "spanfeat/encoders/encoders.h"
#include "spanfeat/eval/metrics.h"
#include "spanfeat/models/align.h"
#include "spanfeat/training/tasks.h"

namespace spanfeat {
namespace {

std::vector<std::uint8_t> SpanMask(int n, const LabeledSpan& s) {
  std::vector<std::uint8_t> mask(n, 0);
  for (int i = s.start; i < s.end; ++i) mask[i] = 1;
  return mask;
}

bool IsTagger(Architecture a) {
  return a == Architecture::kIntentTagger || a == Architecture::kFeatureTaggerFlat ||
         a == Architecture::kFeatureTaggerCascaded;
}

std::vector<std::string> IntentInventory(const Corpus& corpus) {
  std::vector<std::string> labels;
  for (const auto& u : corpus) {
    for (const auto& s : u.spans) {
      if (std::find(labels.begin(), labels.end(), s.intent) == labels.end()) {
        labels.push_back(s.intent);
      }
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

TrainedModel TrainModel(Architecture architecture, std::optional<Dimension> dimension,
                        const Corpus& train, const Corpus& dev, const TrainOptions& options,
                        const EpochCallback& on_epoch) {
  if (train.empty()) throw TrainingError("cannot train on an empty corpus");
  if (architecture == Architecture::kIntentTagger) {
    if (dimension) throw std::invalid_argument("the intent tagger takes no dimension");
  } else if (!dimension) {
    throw std::invalid_argument(std::string(ArchitectureTag(architecture)) +
                                " needs a feature dimension");
  }

  TrainSchedule schedule;
  schedule.epochs = options.epochs;
  schedule.seed = options.seed + 1;
  schedule.keep_best = options.keep_best;
  schedule.track_train_accuracy = options.track_train_accuracy;

  Vocabulary words = BuildWordVocabulary(train, options.word_min_count);
  TrainedModel out;
  if (IsTagger(architecture)) {
    std::vector<std::string> labels = architecture == Architecture::kIntentTagger
                                          ? IntentInventory(train)
                                          : DimensionLabels(*dimension);
    auto tagger = std::make_unique<SequenceTagger>(architecture, dimension, std::move(labels),
                                                   options.tagger, std::move(words),
                                                   BuildCharVocabulary(train), options.seed);
    schedule.clip_norm = options.tagger_clip_norm;
    TaggerTask task(*tagger, MakeTaggingExamples(*tagger, train),
                    MakeTaggingExamples(*tagger, dev));
    out.history = Train(task, options.optimizer.value_or(options.sgd), schedule, on_epoch);
    out.model = std::move(tagger);
  } else {
    std::unique_ptr<SpanClassifier> classifier;
    if (architecture == Architecture::kSpanCnn) {
      classifier =
          std::make_unique<SpanCnn>(*dimension, options.span_cnn, std::move(words), options.seed);
    } else {
      classifier = std::make_unique<GlobalLocal>(*dimension, options.global_local,
                                                 std::move(words), options.seed);
    }
    ClassifierTask task(*classifier, MakeMaskedExamples(train, *dimension),
                        MakeMaskedExamples(dev, *dimension));
    out.history =
        Train(task, options.optimizer.value_or(options.adadelta), schedule, on_epoch);
    out.model = std::move(classifier);
  }
  return out;
}

std::string ModelName(const Model& model) {
  std::string name(ArchitectureTag(model.architecture()));
  if (const auto* gl = dynamic_cast<const GlobalLocal*>(&model)) {
    if (!gl->config().use_global_context) name += "-no-global";
    if (!gl->config().share_encoder_embedding) name += "-no-shared";
    if (gl->config().share_pooling_params) name += "-shared-pooling";
  }
  return name;
}

std::vector<std::string> PredictFeatureLabels(const Model& model,
                                              const std::vector<std::string>& tokens,
                                              const std::vector<LabeledSpan>& spans) {
  const int n = static_cast<int>(tokens.size());
  ValidateSpans(spans, n);
  if (const auto* tagger = dynamic_cast<const SequenceTagger*>(&model)) {
    if (tagger->cascaded()) return TagFeaturesCascaded(tokens, spans, *tagger);
    if (tagger->architecture() == Architecture::kFeatureTaggerFlat) {
      return AlignFeatureSpans(spans, TagFeaturesFlat(tokens, *tagger), *tagger->dimension());
    }
    throw std::invalid_argument("the intent tagger does not predict features");
  }
  const auto& classifier = dynamic_cast<const SpanClassifier&>(model);
  std::vector<std::string> labels;
  labels.reserve(spans.size());
  for (const auto& s : spans) {
    const auto mask = SpanMask(n, s);
    if (const auto* gl = dynamic_cast<const GlobalLocal*>(&classifier)) {
      labels.push_back(ClassifyGlobalLocal(tokens, mask, *gl));
    } else {
      labels.push_back(ClassifySpanCnn(
          std::vector<std::string>(tokens.begin() + s.start, tokens.begin() + s.end),
          dynamic_cast<const SpanCnn&>(classifier)));
    }
  }
  return labels;
}

EvalReport EvaluateModel(const Model& model, const Corpus& test, const EvalOptions& options) {
  EvalReport report;
  report.model = ModelName(model);
  report.corpus = options.corpus;
  report.span_mode = options.pipeline ? "pipeline" : "gold";
  if (options.pipeline && options.intent_tagger == nullptr) {
    throw std::invalid_argument("pipeline evaluation needs an intent tagger");
  }

  const auto* tagger = dynamic_cast<const SequenceTagger*>(&model);
  if (tagger != nullptr && tagger->architecture() == Architecture::kIntentTagger) {
    std::vector<std::vector<LabeledSpan>> pred, gold;
    for (const auto& u : test) {
      pred.push_back(TagIntents(u.tokens, *tagger));
      gold.push_back(IntentLabels(u));
    }
    report.intent_spans = SpanF1(pred, gold);
    report.span_mode = "n/a";
    return report;
  }

  const Dimension d = tagger != nullptr ? *tagger->dimension()
                                        : dynamic_cast<const SpanClassifier&>(model).dimension();
  std::vector<std::string> pred_labels, gold_labels;
  std::vector<std::vector<LabeledSpan>> raw_pred, raw_gold, intent_spans;
  for (const auto& u : test) {
    const auto gold_spans = FeatureSpans(u, d);
    for (const auto& s : gold_spans) gold_labels.push_back(s.label);
    const auto gold_intents = IntentLabels(u);
    const auto input_spans =
        options.pipeline ? TagIntents(u.tokens, *options.intent_tagger) : gold_intents;

    std::vector<std::string> labels;
    if (tagger != nullptr && !tagger->cascaded()) {
      auto feature_spans = TagFeaturesFlat(u.tokens, *tagger);
      labels = AlignFeatureSpans(input_spans, feature_spans, d);
      raw_pred.push_back(std::move(feature_spans));
      raw_gold.push_back(gold_spans);
      intent_spans.push_back(input_spans);
    } else {
      labels = PredictFeatureLabels(model, u.tokens, input_spans);
    }
    if (options.pipeline) {
      std::vector<LabeledSpan> labelled;
      for (size_t i = 0; i < input_spans.size(); ++i) {
        labelled.push_back({input_spans[i].start, input_spans[i].end, labels[i]});
      }
      labels = AlignFeatureSpans(gold_intents, labelled, d);
    }
    pred_labels.insert(pred_labels.end(), labels.begin(), labels.end());
  }

  FeatureSection section;
  section.scores = FeatureF1(pred_labels, gold_labels, d);
  if (tagger != nullptr && !tagger->cascaded()) {
    section.feature_spans = SpanF1(raw_pred, raw_gold);
    section.boundary_disagreement = BoundaryDisagreementRate(intent_spans, raw_pred);
  }
  report.features.push_back(std::move(section));
  return report;
}

Corpus AnnotateCorpus(const Model& model, const Corpus& input,
                      const SequenceTagger* intent_tagger) {
  Corpus out;
  out.reserve(input.size());
  const auto* tagger = dynamic_cast<const SequenceTagger*>(&model);
  const bool intents = tagger != nullptr && tagger->architecture() == Architecture::kIntentTagger;
  for (const auto& u : input) {
    AnnotatedUtterance a;
    a.tokens = u.tokens;
    if (intents || intent_tagger != nullptr) {
      const auto spans = TagIntents(u.tokens, intents ? *tagger : *intent_tagger);
      for (const auto& s : spans) {
        IntentSpan span{s.start, s.end, s.label, {}};
        for (Dimension d : kAllDimensions) span.feature(d) = DefaultLabel(d);
        a.spans.push_back(std::move(span));
      }
    } else {
      a.spans = u.spans;
    }
    if (!intents) {
      const Dimension d = tagger != nullptr
                              ? *tagger->dimension()
                              : dynamic_cast<const SpanClassifier&>(model).dimension();
      std::vector<LabeledSpan> spans;
      for (const auto& s : a.spans) spans.push_back({s.start, s.end, s.intent});
      const auto labels = PredictFeatureLabels(model, a.tokens, spans);
      for (size_t i = 0; i < labels.size(); ++i) a.spans[i].feature(d) = labels[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace spanfeat
