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

#include "spanfeat/cli/cli.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spanfeat/data/corpus.h"
#include "spanfeat/data/synthetic.h"
#include "spanfeat/eval/compare.h"
#include "spanfeat/models/bundle.h"
#include "spanfeat/pipeline/pipeline.h"
#include "spanfeat/verify/grad_suite.h"

namespace spanfeat {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by train and ablate.
struct TrainFlags {
  std::string train_path;
  std::string dev_path;
  std::uint64_t seed = 7;
  int epochs = 30;
  std::optional<double> learning_rate;
  std::optional<double> momentum;
  std::optional<int> batch_size;
  std::vector<int> word_dims;
  int lstm_hidden = 32;
  int char_dim = 30;
  int char_filters = 30;
  int boundary_dim = 10;
  std::vector<int> filter_widths;
  int filters_per_width = 20;
  bool constrain_training = false;
};

void AddTrainFlags(CLI::App* cmd, TrainFlags& f, bool corpus_required) {
  auto* train = cmd->add_option("--train", f.train_path, "training corpus (JSON lines)");
  if (corpus_required) train->required();
  train->check(CLI::ExistingFile);
  cmd->add_option("--dev", f.dev_path, "dev corpus used for model selection")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", f.seed, "random seed")->envname("SPANFEAT_SEED");
  cmd->add_option("--epochs", f.epochs, "training epochs")->check(CLI::PositiveNumber);
  cmd->add_option("--lr", f.learning_rate, "learning rate");
  cmd->add_option("--momentum", f.momentum, "SGD momentum (taggers)");
  cmd->add_option("--batch-size", f.batch_size, "mini-batch size");
  cmd->add_option("--word-dims", f.word_dims, "word embedding table widths");
  cmd->add_option("--lstm-hidden", f.lstm_hidden, "LSTM units per direction");
  cmd->add_option("--char-dim", f.char_dim, "character embedding width");
  cmd->add_option("--char-filters", f.char_filters, "character CNN filters");
  cmd->add_option("--boundary-dim", f.boundary_dim, "cascade boundary embedding width");
  cmd->add_option("--filter-widths", f.filter_widths, "CNN filter widths");
  cmd->add_option("--filters", f.filters_per_width, "CNN filters per width");
}

TrainOptions MakeTrainOptions(const TrainFlags& f) {
  TrainOptions o;
  o.seed = f.seed;
  o.epochs = f.epochs;
  if (!f.word_dims.empty()) {
    o.tagger.encoder.word_embedding_dims = f.word_dims;
    o.span_cnn.word_embedding_dims = f.word_dims;
    o.global_local.word_embedding_dims = f.word_dims;
  }
  o.tagger.encoder.lstm_hidden = f.lstm_hidden;
  o.tagger.encoder.char_embedding_dim = f.char_dim;
  o.tagger.encoder.char_filters = f.char_filters;
  o.tagger.boundary_dim = f.boundary_dim;
  o.tagger.constrain_training = f.constrain_training;
  if (!f.filter_widths.empty()) {
    o.span_cnn.filter_widths = f.filter_widths;
    o.global_local.filter_widths = f.filter_widths;
  }
  o.span_cnn.filters_per_width = f.filters_per_width;
  o.global_local.filters_per_width = f.filters_per_width;
  if (f.learning_rate) {
    o.sgd.learning_rate = *f.learning_rate;
    o.adadelta.learning_rate = *f.learning_rate;
  }
  if (f.momentum) o.sgd.momentum = *f.momentum;
  if (f.batch_size) {
    o.sgd.batch_size = *f.batch_size;
    o.adadelta.batch_size = *f.batch_size;
  }
  return o;
}

Corpus LoadOptionalCorpus(const std::string& path) {
  return path.empty() ? Corpus{} : LoadCorpus(path);
}

const SequenceTagger& AsIntentTagger(const Model& m, const std::string& path) {
  const auto* t = dynamic_cast<const SequenceTagger*>(&m);
  if (t == nullptr || t->architecture() != Architecture::kIntentTagger) {
    throw UsageError(path + " is not an intent-tagger model");
  }
  return *t;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<Dimension> ParseDimensions(const std::vector<std::string>& names) {
  std::vector<Dimension> dims;
  if (names.empty()) return {kAllDimensions.begin(), kAllDimensions.end()};
  for (const auto& n : names) dims.push_back(ParseDimension(n));
  return dims;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Multi-intent span tagging and intent-feature classification", "spanfeat"};
  app.set_config("--config", "", "key-value (TOML/INI) config file; flags override it");
  app.require_subcommand(1);

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "write synthetic train/dev/test corpora");
  SyntheticConfig gen_config;
  std::string gen_dir;
  std::optional<double> gen_rho;
  std::vector<std::string> gen_dim_rho;
  gen->add_option("--out-dir", gen_dir, "output directory")->required();
  gen->add_option("--seed", gen_config.seed, "generator seed")->envname("SPANFEAT_SEED");
  gen->add_option("--train-size", gen_config.train_size);
  gen->add_option("--dev-size", gen_config.dev_size);
  gen->add_option("--test-size", gen_config.test_size);
  gen->add_option("--rho", gen_rho, "in-span cue probability for every dimension");
  gen->add_option("--dimension-rho", gen_dim_rho, "per-dimension override, e.g. tense=0");

  // train
  auto* train = app.add_subcommand("train", "train one model and save its bundle");
  TrainFlags train_flags;
  std::string train_arch, train_dim, train_model, train_history;
  bool no_global = false, no_shared = false, share_pooling = false;
  AddTrainFlags(train, train_flags, true);
  train->add_option("--arch", train_arch, "architecture tag")
      ->required()
      ->check(CLI::IsMember({"intent-tagger", "feature-tagger-flat", "feature-tagger-cascaded",
                             "span-cnn", "global-local"}));
  train->add_option("--dimension", train_dim, "feature dimension (feature models)");
  train->add_option("--model", train_model, "output bundle path")->required();
  train->add_option("--history", train_history, "write the training history here");
  train->add_flag("--no-global-context", no_global, "global-local: span-only inputs");
  train->add_flag("--no-shared-embedding", no_shared, "global-local: separate embeddings");
  train->add_flag("--share-pooling", share_pooling, "global-local: one pooler for g and l");
  train->add_flag("--constrain-training", train_flags.constrain_training,
                  "taggers: IOBES-constrained partition function");

  // eval
  auto* eval = app.add_subcommand("eval", "score a model on a corpus");
  std::string eval_model, eval_test, eval_intent, eval_out;
  bool eval_pipeline = false;
  eval->add_option("--model", eval_model, "model bundle")->required()->check(CLI::ExistingFile);
  eval->add_option("--test", eval_test, "evaluation corpus")->required()->check(CLI::ExistingFile);
  eval->add_flag("--pipeline", eval_pipeline, "use predicted intent spans");
  eval->add_option("--intent-model", eval_intent, "intent tagger bundle for --pipeline")
      ->check(CLI::ExistingFile);
  eval->add_option("--out", eval_out, "also write the JSON report here");

  // predict
  auto* predict = app.add_subcommand("predict", "annotate corpus lines from stdin");
  std::string predict_model, predict_intent;
  predict->add_option("--model", predict_model, "model bundle")
      ->required()
      ->check(CLI::ExistingFile);
  predict->add_option("--intent-model", predict_intent,
                      "predict spans with this intent tagger first")
      ->check(CLI::ExistingFile);

  // ablate
  auto* ablate = app.add_subcommand(
      "ablate", "train global-local, its two ablations and span-cnn; compare them");
  TrainFlags ablate_flags;
  std::string ablate_test, ablate_out;
  std::vector<std::string> ablate_dims;
  AddTrainFlags(ablate, ablate_flags, false);
  ablate->add_option("--test", ablate_test, "test corpus")->check(CLI::ExistingFile);
  ablate->add_option("--dimension", ablate_dims, "dimensions to run (default: all)");
  ablate->add_option("--out", ablate_out, "also write the JSON comparison here");

  // grad-check
  auto* grad = app.add_subcommand("grad-check", "finite-difference gradient suite");
  std::uint64_t grad_seed = 1;
  grad->add_option("--seed", grad_seed, "seed for the random test tensors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "spanfeat: " << e.what() << '\n';
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  try {
    if (*gen) {
      if (gen_rho) gen_config.rho.fill(*gen_rho);
      for (const auto& spec : gen_dim_rho) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("--dimension-rho expects dim=value");
        gen_config.rho[DimensionIndex(ParseDimension(spec.substr(0, eq)))] =
            std::stod(spec.substr(eq + 1));
      }
      const SyntheticCorpora data = GenerateSynthetic(gen_config);
      std::filesystem::create_directories(gen_dir);
      const std::filesystem::path dir(gen_dir);
      SaveCorpus(data.train, (dir / "train.jsonl").string());
      SaveCorpus(data.dev, (dir / "dev.jsonl").string());
      SaveCorpus(data.test, (dir / "test.jsonl").string());
      out << "wrote " << data.train.size() << "/" << data.dev.size() << "/"
          << data.test.size() << " utterances to " << gen_dir << '\n';
      return 0;
    }

    if (*train) {
      const Architecture arch = ParseArchitecture(train_arch);
      if ((no_global || no_shared || share_pooling) && arch != Architecture::kGlobalLocal) {
        throw UsageError(
            "--no-global-context, --no-shared-embedding and --share-pooling require "
            "--arch global-local");
      }
      const bool is_tagger = arch == Architecture::kIntentTagger ||
                             arch == Architecture::kFeatureTaggerFlat ||
                             arch == Architecture::kFeatureTaggerCascaded;
      if (train_flags.constrain_training && !is_tagger) {
        throw UsageError("--constrain-training requires a tagger architecture");
      }
      std::optional<Dimension> dim;
      if (arch == Architecture::kIntentTagger) {
        if (!train_dim.empty()) throw UsageError("--dimension is not used by intent-tagger");
      } else {
        if (train_dim.empty()) throw UsageError("--dimension is required for " + train_arch);
        dim = ParseDimension(train_dim);
      }
      TrainOptions options = MakeTrainOptions(train_flags);
      options.global_local.use_global_context = !no_global;
      options.global_local.share_encoder_embedding = !no_shared;
      options.global_local.share_pooling_params = share_pooling;
      const Corpus train_corpus = LoadCorpus(train_flags.train_path);
      const Corpus dev_corpus = LoadOptionalCorpus(train_flags.dev_path);
      TrainedModel trained = TrainModel(arch, dim, train_corpus, dev_corpus, options);
      SaveModel(*trained.model, train_model);
      const std::string history = trained.history.ToJsonLines();
      if (!train_history.empty()) WriteFile(train_history, history);
      out << history;
      out << "saved " << ModelName(*trained.model) << " to " << train_model << '\n';
      return 0;
    }

    if (*eval) {
      if (eval_pipeline && eval_intent.empty()) {
        throw UsageError("--pipeline requires --intent-model");
      }
      if (!eval_intent.empty() && !eval_pipeline) {
        throw UsageError("--intent-model is only used with --pipeline");
      }
      const auto model = LoadModel(eval_model);
      std::unique_ptr<Model> intent;
      EvalOptions options;
      options.corpus = std::filesystem::path(eval_test).filename().string();
      options.pipeline = eval_pipeline;
      if (eval_pipeline) {
        if (model->architecture() == Architecture::kIntentTagger) {
          throw UsageError("--pipeline applies to feature models only");
        }
        intent = LoadModel(eval_intent);
        options.intent_tagger = &AsIntentTagger(*intent, eval_intent);
      }
      const EvalReport report = EvaluateModel(*model, LoadCorpus(eval_test), options);
      out << FormatReport(report);
      if (!eval_out.empty()) WriteFile(eval_out, ReportToJson(report).dump(2) + "\n");
      return 0;
    }

    if (*predict) {
      const auto model = LoadModel(predict_model);
      std::unique_ptr<Model> intent;
      const SequenceTagger* intent_tagger = nullptr;
      if (!predict_intent.empty()) {
        intent = LoadModel(predict_intent);
        intent_tagger = &AsIntentTagger(*intent, predict_intent);
      }
      const Corpus input = ReadCorpus(in, "<stdin>");
      WriteCorpus(AnnotateCorpus(*model, input, intent_tagger), out);
      return 0;
    }

    if (*ablate) {
      Corpus train_corpus, dev_corpus, test_corpus;
      if (ablate_flags.train_path.empty()) {
        if (!ablate_test.empty() || !ablate_flags.dev_path.empty()) {
          throw UsageError("--dev/--test need --train as well");
        }
        SyntheticConfig sc;
        sc.seed = ablate_flags.seed;
        SyntheticCorpora data = GenerateSynthetic(sc);
        train_corpus = std::move(data.train);
        dev_corpus = std::move(data.dev);
        test_corpus = std::move(data.test);
        out << "using the default synthetic corpus (seed " << sc.seed << ")\n";
      } else {
        if (ablate_test.empty()) throw UsageError("--test is required with --train");
        train_corpus = LoadCorpus(ablate_flags.train_path);
        dev_corpus = LoadOptionalCorpus(ablate_flags.dev_path);
        test_corpus = LoadCorpus(ablate_test);
      }
      struct Variant {
        Architecture arch;
        bool global, shared;
      };
      const Variant variants[] = {{Architecture::kGlobalLocal, true, true},
                                  {Architecture::kSpanCnn, true, true},
                                  {Architecture::kGlobalLocal, false, true},
                                  {Architecture::kGlobalLocal, true, false}};
      std::vector<EvalReport> merged;
      for (const Variant& v : variants) {
        EvalReport all;
        for (Dimension d : ParseDimensions(ablate_dims)) {
          TrainOptions options = MakeTrainOptions(ablate_flags);
          options.global_local.use_global_context = v.global;
          options.global_local.share_encoder_embedding = v.shared;
          TrainedModel trained = TrainModel(v.arch, d, train_corpus, dev_corpus, options);
          EvalReport r = EvaluateModel(*trained.model, test_corpus, {});
          if (all.model.empty()) {
            all.model = r.model;
            all.corpus = r.corpus;
          }
          MergeReport(all, r);
          err << "trained " << r.model << " / " << DimensionName(d) << '\n';
        }
        merged.push_back(std::move(all));
      }
      const Comparison cmp = CompareModels(merged);
      out << FormatFeatureTable(merged) << '\n' << cmp.ToText();
      if (!ablate_out.empty()) {
        nlohmann::ordered_json j;
        j["comparison"] = cmp.ToJson();
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : merged) j["reports"].push_back(ReportToJson(r));
        WriteFile(ablate_out, j.dump(2) + "\n");
      }
      return 0;
    }

    if (*grad) {
      const auto results = RunGradSuite(grad_seed);
      out << FormatGradSuite(results);
      for (const auto& r : results) {
        if (!r.pass()) return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    err << "spanfeat: error: " << msg << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spanfeat
