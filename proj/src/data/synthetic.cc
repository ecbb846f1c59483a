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

#include "spanfeat/data/synthetic.h"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace spanfeat {
namespace {

using Rng = std::mt19937_64;

template <typename T>
const T& Pick(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

std::set<std::string> ReservedWords(const SyntheticLexicon& lex) {
  std::set<std::string> words;
  for (const auto& per_dim : lex.cues) {
    for (const auto& per_label : per_dim) words.insert(per_label.begin(), per_label.end());
  }
  for (const auto& heads : lex.intent_heads) words.insert(heads.begin(), heads.end());
  words.insert(lex.determiners.begin(), lex.determiners.end());
  words.insert(lex.connectives.begin(), lex.connectives.end());
  words.insert(lex.context_separator);
  return words;
}

struct PendingSpan {
  std::string intent;
  std::vector<std::string> cue_words;  // in slot order
  std::vector<std::string> content;
};

AnnotatedUtterance GenerateUtterance(const SyntheticConfig& config,
                                     const std::vector<std::string>& fillers,
                                     Rng& rng) {
  const SyntheticLexicon& lex = DefaultLexicon();
  std::uniform_int_distribution<int> span_count(1, config.max_spans);
  std::uniform_int_distribution<int> filler_count(1, config.max_fillers_per_span);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int num_spans = span_count(rng);
  std::array<int, kNumDimensions> labels{};
  for (Dimension d : kAllDimensions) {
    const auto& prior = config.priors[DimensionIndex(d)];
    std::discrete_distribution<int> dist(prior.begin(), prior.end());
    labels[DimensionIndex(d)] = dist(rng);
  }

  std::vector<PendingSpan> spans(num_spans);
  std::array<bool, kNumDimensions> carried{};
  for (PendingSpan& span : spans) {
    const size_t intent = std::uniform_int_distribution<size_t>(
        0, lex.intents.size() - 1)(rng);
    span.intent = lex.intents[intent];
    for (Dimension d : lex.cue_slot_order) {
      const int di = DimensionIndex(d);
      if (unit(rng) < config.rho[di]) {
        span.cue_words.push_back(Pick(lex.cues[di][labels[di]], rng));
        carried[di] = true;
      }
    }
    span.content.push_back(Pick(lex.intent_heads[intent], rng));
    span.content.push_back(Pick(lex.determiners, rng));
    const int nf = filler_count(rng);
    for (int i = 0; i < nf; ++i) span.content.push_back(Pick(fillers, rng));
  }

  AnnotatedUtterance u;
  for (Dimension d : lex.cue_slot_order) {
    const int di = DimensionIndex(d);
    if (!carried[di]) u.tokens.push_back(Pick(lex.cues[di][labels[di]], rng));
  }
  if (!u.tokens.empty()) u.tokens.push_back(lex.context_separator);

  for (int s = 0; s < num_spans; ++s) {
    if (s > 0) u.tokens.push_back(Pick(lex.connectives, rng));
    IntentSpan span;
    span.start = static_cast<int>(u.tokens.size());
    u.tokens.insert(u.tokens.end(), spans[s].cue_words.begin(),
                    spans[s].cue_words.end());
    u.tokens.insert(u.tokens.end(), spans[s].content.begin(),
                    spans[s].content.end());
    span.end = static_cast<int>(u.tokens.size());
    span.intent = spans[s].intent;
    for (Dimension d : kAllDimensions) {
      span.feature(d) = DimensionLabels(d)[labels[DimensionIndex(d)]];
    }
    u.spans.push_back(std::move(span));
  }
  return u;
}

Corpus GenerateSplit(const SyntheticConfig& config,
                     const std::vector<std::string>& fillers, int size,
                     std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  Rng rng(seq);
  Corpus corpus;
  corpus.reserve(size);
  for (int i = 0; i < size; ++i) {
    corpus.push_back(GenerateUtterance(config, fillers, rng));
  }
  return corpus;
}

}  // namespace

const SyntheticLexicon& DefaultLexicon() {
  static const SyntheticLexicon lexicon = [] {
    SyntheticLexicon lex;
    lex.cues[DimensionIndex(Dimension::kAttrCf)] = {
        {"personally", "myself"}, {"apparently", "reportedly"}};
    lex.cues[DimensionIndex(Dimension::kAttrEv)] = {{"i", "we"},
                                                     {"they", "someone"}};
    lex.cues[DimensionIndex(Dimension::kCommunicativeFunction)] = {
        {"fyi", "btw"},         {"problem", "broken"}, {"please", "kindly"},
        {"confirm", "verify"},  {"how", "why"}};
    lex.cues[DimensionIndex(Dimension::kModality)] = {
        {"maybe", "planning"}, {"trying", "attempting"}, {"actually", "definitely"}};
    lex.cues[DimensionIndex(Dimension::kNegation)] = {{"indeed", "really"},
                                                       {"not", "never"}};
    lex.cues[DimensionIndex(Dimension::kTense)] = {
        {"yesterday", "earlier"}, {"now", "currently"}, {"tomorrow", "soon"}};
    lex.intents = {"install", "cancel", "refund", "payment", "login", "general"};
    lex.intent_heads = {{"install", "setup"},   {"cancel", "terminate"},
                        {"refund", "reimburse"}, {"pay", "charge"},
                        {"login", "signin"},     {"see", "notice"}};
    lex.determiners = {"the", "my", "a"};
    lex.connectives = {"and", "but", "also", "then"};
    lex.context_separator = ",";
    lex.cue_slot_order = {Dimension::kAttrCf,   Dimension::kAttrEv,
                          Dimension::kModality, Dimension::kNegation,
                          Dimension::kTense,    Dimension::kCommunicativeFunction};
    return lex;
  }();
  return lexicon;
}

std::array<std::vector<double>, kNumDimensions> DefaultLabelPriors() {
  return {{
      {0.7, 0.3},
      {0.6, 0.4},
      {0.3, 0.25, 0.2, 0.1, 0.15},
      {0.2, 0.2, 0.6},
      {0.7, 0.3},
      {0.3, 0.5, 0.2},
  }};
}

void SyntheticConfig::Validate() const {
  if (train_size < 1 || dev_size < 1 || test_size < 1) {
    throw std::invalid_argument("synthetic split sizes must be >= 1");
  }
  if (max_spans < 1 || max_fillers_per_span < 1 || fillers_per_split < 1) {
    throw std::invalid_argument("synthetic span/filler counts must be >= 1");
  }
  for (Dimension d : kAllDimensions) {
    const int di = DimensionIndex(d);
    if (rho[di] < 0.0 || rho[di] > 1.0) {
      throw std::invalid_argument("rho for " + std::string(DimensionName(d)) +
                                  " must lie in [0, 1]");
    }
    if (priors[di].size() != DimensionLabels(d).size()) {
      throw std::invalid_argument("prior for " + std::string(DimensionName(d)) +
                                  " needs one weight per label");
    }
    double total = 0.0;
    for (double p : priors[di]) {
      if (p < 0.0) throw std::invalid_argument("negative prior weight");
      total += p;
    }
    if (total <= 0.0) throw std::invalid_argument("prior weights sum to zero");
  }
}

std::array<std::vector<std::string>, 3> SyntheticFillerPools(
    const SyntheticConfig& config) {
  static const std::vector<std::string> onsets = {"b", "d", "f", "g", "k", "l",
                                                  "m", "n", "p", "r", "s", "t",
                                                  "v", "z", "sh", "tr"};
  static const std::vector<std::string> nuclei = {"a", "e", "i", "o", "u", "ai"};
  static const std::vector<std::string> codas = {"", "", "n", "r", "x", "p"};
  const std::set<std::string> reserved = ReservedWords(DefaultLexicon());
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), 0xF111u};
  Rng rng(seq);
  std::uniform_int_distribution<int> syllables(2, 3);
  std::set<std::string> seen;
  std::array<std::vector<std::string>, 3> pools;
  for (auto& pool : pools) {
    while (static_cast<int>(pool.size()) < config.fillers_per_split) {
      std::string word;
      const int n = syllables(rng);
      for (int i = 0; i < n; ++i) word += Pick(onsets, rng) + Pick(nuclei, rng);
      word += Pick(codas, rng);
      if (reserved.count(word) || !seen.insert(word).second) continue;
      pool.push_back(word);
    }
  }
  return pools;
}

SyntheticCorpora GenerateSynthetic(const SyntheticConfig& config) {
  config.Validate();
  auto pools = SyntheticFillerPools(config);
  SyntheticCorpora out;
  out.train = GenerateSplit(config, pools[0], config.train_size, 1);
  out.dev = GenerateSplit(config, pools[1], config.dev_size, 2);
  out.test = GenerateSplit(config, pools[2], config.test_size, 3);
  return out;
}

}  // namespace spanfeat
