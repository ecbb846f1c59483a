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

#include "spanfeat/verify/grad_suite.h"

#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>

#include "spanfeat/core/grad_check.h"
#include "spanfeat/core/ops.h"
#include "spanfeat/crf/crf.h"
#include "spanfeat/encoders/encoders.h"
#include "spanfeat/models/global_local.h"
#include "spanfeat/models/sequence_tagger.h"
#include "spanfeat/models/span_cnn.h"

namespace spanfeat {
namespace {

// Uniform in [-1, -0.1] U [0.1, 1]: keeps ReLU inputs clear of the kink.
Tensor RandomTensor(std::vector<int> shape, Rng& rng) {
  Tensor t(std::move(shape));
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::bernoulli_distribution sign(0.5);
  for (double& v : t.values()) v = sign(rng) ? mag(rng) : -mag(rng);
  return t;
}

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : rng_(seed) {}

  // Checks `f` reduced to a scalar through fixed random weights.
  void Primitive(const std::string& name, std::vector<Tensor*> inputs,
                 const std::function<Var(Tape&)>& f) {
    std::vector<int> shape;
    {
      Tape tape(/*record=*/false);
      shape = f(tape).shape();
    }
    const Tensor weights = RandomTensor(shape, rng_);
    const ScalarFunction scalar = [&](Tape& tape) {
      return WeightedSum(tape, f(tape), weights);
    };
    Add(name, false, GradCheck(scalar, inputs), kPrimitiveGradTolerance);
  }

  void EndToEnd(const std::string& name, ParameterStore& store, const ScalarFunction& loss) {
    std::vector<Tensor*> inputs;
    for (size_t i = 0; i < store.size(); ++i) inputs.push_back(&store.tensor(i));
    Add(name, true, GradCheck(loss, inputs), kModelGradTolerance);
  }

  Rng& rng() { return rng_; }
  std::vector<GradCheckResult> results() { return std::move(results_); }

 private:
  void Add(const std::string& name, bool end_to_end, double error, double tolerance) {
    results_.push_back({name, end_to_end, error, tolerance});
  }

  Rng rng_;
  std::vector<GradCheckResult> results_;
};

void Primitives(Suite& s) {
  Rng& rng = s.rng();
  Tensor a = RandomTensor({3, 4}, rng);
  Tensor b = RandomTensor({4, 2}, rng);
  Tensor c = RandomTensor({3, 4}, rng);
  Tensor v = RandomTensor({4}, rng);
  Tensor bias = RandomTensor({4}, rng);

  s.Primitive("matmul", {&a, &b}, [&](Tape& t) {
    return MatMul(t, t.Parameter(a), t.Parameter(b));
  });
  s.Primitive("matmul_vector", {&v, &b}, [&](Tape& t) {
    return MatMul(t, t.Parameter(v), t.Parameter(b));
  });
  s.Primitive("add", {&a, &c}, [&](Tape& t) {
    return Add(t, t.Parameter(a), t.Parameter(c));
  });
  s.Primitive("add_bias", {&a, &bias}, [&](Tape& t) {
    return AddBias(t, t.Parameter(a), t.Parameter(bias));
  });
  s.Primitive("scale", {&a}, [&](Tape& t) { return Scale(t, t.Parameter(a), -1.7); });
  Tensor s1 = RandomTensor({1}, rng), s2 = RandomTensor({1}, rng);
  s.Primitive("sum_scalars", {&s1, &s2}, [&](Tape& t) {
    const Var parts[] = {t.Parameter(s1), t.Parameter(s2), t.Parameter(s1)};
    return SumScalars(t, parts);
  });
  Tensor w = RandomTensor({3, 4}, rng);
  s.Primitive("weighted_sum", {&a}, [&](Tape& t) { return WeightedSum(t, t.Parameter(a), w); });
  s.Primitive("relu", {&a}, [&](Tape& t) { return Relu(t, t.Parameter(a)); });
  s.Primitive("tanh", {&a}, [&](Tape& t) { return Tanh(t, t.Parameter(a)); });
  s.Primitive("sigmoid", {&a}, [&](Tape& t) { return Sigmoid(t, t.Parameter(a)); });

  Tensor seq = RandomTensor({5, 3}, rng);
  for (int width : {1, 2, 3, 4}) {
    auto filters = std::make_shared<Tensor>(RandomTensor({width, 3, 2}, rng));
    auto fbias = std::make_shared<Tensor>(RandomTensor({2}, rng));
    s.Primitive("conv1d_same_w" + std::to_string(width), {&seq, filters.get(), fbias.get()},
                [&, filters, fbias](Tape& t) {
                  return Conv1dSame(t, t.Parameter(seq), t.Parameter(*filters),
                                    t.Parameter(*fbias));
                });
  }
  s.Primitive("max_over_time", {&seq}, [&](Tape& t) { return MaxOverTime(t, t.Parameter(seq)); });
  s.Primitive("concat", {&a, &c, &b}, [&](Tape& t) {
    const Var parts[] = {t.Parameter(a), t.Parameter(c)};
    return Concat(t, parts);
  });
  s.Primitive("concat_vectors", {&v, &bias}, [&](Tape& t) {
    const Var parts[] = {t.Parameter(v), t.Parameter(bias)};
    return Concat(t, parts);
  });
  const int gather_rows[] = {4, 0, 2, 0};
  s.Primitive("gather_rows", {&seq}, [&](Tape& t) {
    return GatherRows(t, t.Parameter(seq), gather_rows);
  });
  s.Primitive("stack_rows", {&v, &bias}, [&](Tape& t) {
    const Var rows[] = {t.Parameter(v), t.Parameter(bias), t.Parameter(v)};
    return StackRows(t, rows);
  });
  s.Primitive("row", {&seq}, [&](Tape& t) { return Row(t, t.Parameter(seq), 3); });
  Tensor table = RandomTensor({6, 3}, rng);
  const int ids[] = {1, 5, 1, 0};
  s.Primitive("embedding_lookup", {&table}, [&](Tape& t) {
    return EmbeddingLookup(t, t.Parameter(table), ids);
  });

  Tensor x = RandomTensor({3}, rng), h = RandomTensor({2}, rng), cell = RandomTensor({2}, rng);
  Tensor wi = RandomTensor({3, 8}, rng), wr = RandomTensor({2, 8}, rng),
         wb = RandomTensor({8}, rng);
  for (bool take_c : {false, true}) {
    s.Primitive(take_c ? "lstm_cell_c" : "lstm_cell_h", {&x, &h, &cell, &wi, &wr, &wb},
                [&, take_c](Tape& t) {
                  LstmWeights lw{t.Parameter(wi), t.Parameter(wr), t.Parameter(wb)};
                  LstmState st = LstmCell(t, t.Parameter(x), t.Parameter(h),
                                          t.Parameter(cell), lw);
                  return take_c ? st.c : st.h;
                });
  }
  Tensor logits = RandomTensor({5}, rng);
  s.Primitive("softmax_cross_entropy", {&logits}, [&](Tape& t) {
    return SoftmaxCrossEntropy(t, t.Parameter(logits), 2);
  });

  // CRF over two labels (9 tags); the gold path is IOBES-legal.
  TagSet tags({"x", "y"});
  const ConstraintMask legal = BuildIobesConstraints(tags);
  Tensor emissions = RandomTensor({5, tags.size()}, rng);
  Tensor transitions = RandomTensor({tags.size() + 2, tags.size() + 2}, rng);
  const std::vector<int> gold = tags.Indices({"B-x", "E-x", "O", "S-y", "S-x"});
  for (bool constrained : {false, true}) {
    s.Primitive(constrained ? "crf_nll_constrained" : "crf_nll", {&emissions, &transitions},
                [&, constrained](Tape& t) {
                  return CrfNll(t, t.Parameter(emissions), t.Parameter(transitions), gold,
                                legal, constrained);
                });
  }
}

const std::vector<std::vector<std::string>>& ToySentences() {
  static const std::vector<std::vector<std::string>> sentences = {
      {"please", "install", "it", "now"},
      {"I", "never", "paid", "and", "cancel", "it"},
      {"maybe", "refund", "me"},
  };
  return sentences;
}

Vocabulary ToyWords() { return BuildWordVocabulary(ToySentences(), 1); }

Vocabulary ToyChars() {
  Vocabulary v;
  for (const auto& s : ToySentences()) {
    for (const auto& tok : s) {
      for (const auto& ch : SplitCharacters(tok)) v.Add(ch);
    }
  }
  return v;
}

TaggerConfig ToyTaggerConfig() {
  TaggerConfig c;
  c.encoder.word_embedding_dims = {4, 3};
  c.encoder.char_embedding_dim = 3;
  c.encoder.char_filters = 3;
  c.encoder.char_filter_width = 3;
  c.encoder.lstm_hidden = 4;
  c.boundary_dim = 3;
  return c;
}

void Taggers(Suite& s) {
  const auto& tokens = ToySentences()[1];
  const std::vector<LabeledSpan> intents = {{0, 3, "pay"}, {4, 6, "cancel"}};

  {
    SequenceTagger m(Architecture::kIntentTagger, std::nullopt, {"cancel", "pay"},
                     ToyTaggerConfig(), ToyWords(), ToyChars(), 11);
    const TaggingExample ex = m.MakeExample(tokens, intents, {});
    s.EndToEnd("intent-tagger", m.params(), [&](Tape& t) { return m.Loss(t, ex); });
  }
  {
    SequenceTagger m(Architecture::kFeatureTaggerFlat, Dimension::kNegation,
                     DimensionLabels(Dimension::kNegation), ToyTaggerConfig(), ToyWords(),
                     ToyChars(), 12);
    const TaggingExample ex =
        m.MakeExample(tokens, {{0, 3, "negative"}, {4, 6, "positive"}}, {});
    s.EndToEnd("feature-tagger-flat", m.params(), [&](Tape& t) { return m.Loss(t, ex); });
  }
  {
    TaggerConfig config = ToyTaggerConfig();
    config.constrain_training = true;
    SequenceTagger m(Architecture::kFeatureTaggerCascaded, Dimension::kNegation,
                     DimensionLabels(Dimension::kNegation), config, ToyWords(), ToyChars(), 13);
    const TaggingExample ex =
        m.MakeExample(tokens, {{0, 3, "negative"}, {4, 6, "positive"}}, intents);
    s.EndToEnd("feature-tagger-cascaded", m.params(), [&](Tape& t) { return m.Loss(t, ex); });
  }
}

void Classifiers(Suite& s) {
  MaskedExample ex;
  ex.tokens = ToySentences()[1];
  ex.mask = {0, 1, 1, 0, 0, 0};
  ex.gold = 1;

  SpanCnnConfig cnn_config;
  cnn_config.word_embedding_dims = {5};
  cnn_config.filter_widths = {2, 3};
  cnn_config.filters_per_width = 3;
  {
    SpanCnn m(Dimension::kNegation, cnn_config, ToyWords(), 21);
    s.EndToEnd("span-cnn", m.params(), [&](Tape& t) { return m.Loss(t, ex); });
  }

  struct Variant {
    const char* name;
    bool shared_embedding, global_context, shared_pooling;
  };
  const Variant variants[] = {
      {"global-local", true, true, false},
      {"global-local-no-global", true, false, false},
      {"global-local-no-shared", false, true, false},
      {"global-local-shared-pooling", true, true, true},
  };
  for (const Variant& v : variants) {
    GlobalLocalConfig c;
    c.word_embedding_dims = {5};
    c.filter_widths = {2, 3};
    c.filters_per_width = 3;
    c.share_encoder_embedding = v.shared_embedding;
    c.use_global_context = v.global_context;
    c.share_pooling_params = v.shared_pooling;
    GlobalLocal m(Dimension::kNegation, c, ToyWords(), 22);
    s.EndToEnd(v.name, m.params(), [&](Tape& t) { return m.Loss(t, ex); });
  }
}

}  // namespace

std::vector<GradCheckResult> RunGradSuite(std::uint64_t seed) {
  Suite suite(seed);
  Primitives(suite);
  Taggers(suite);
  Classifiers(suite);
  return suite.results();
}

std::string FormatGradSuite(const std::vector<GradCheckResult>& results) {
  std::ostringstream out;
  bool all = true;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %-30s max-rel-err %.3e  (< %.0e)  %s\n",
                  r.end_to_end ? "model" : "primitive", r.name.c_str(), r.max_relative_error,
                  r.tolerance, r.pass() ? "ok" : "FAIL");
    out << line;
    all = all && r.pass();
  }
  out << (all ? "grad-check: all passed\n" : "grad-check: FAILED\n");
  return out.str();
}

}  // namespace spanfeat
