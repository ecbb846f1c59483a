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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"
#include "spanfeat/crf/crf.h"
#include "spanfeat/crf/tag_set.h"
#include "spanfeat/data/iobes.h"
#include "support/oracles.h"

namespace spanfeat {
namespace {

struct Instance {
  Tensor emissions;
  Tensor transitions;
};

Instance RandomInstance(int steps, int num_tags, Rng& rng) {
  Instance in{Tensor({steps, num_tags}), Tensor({num_tags + 2, num_tags + 2})};
  InitUniform(in.emissions, 2.0, rng);
  InitUniform(in.transitions, 2.0, rng);
  return in;
}

TEST(TagSet, Layout) {
  TagSet tags({"a", "b"});
  EXPECT_EQ(tags.size(), 9);
  EXPECT_EQ(tags.Tag(0), "O");
  EXPECT_EQ(tags.Tag(tags.Single(1)), "S-b");
  EXPECT_EQ(tags.Index("E-a"), 3);
  EXPECT_THROW(tags.Index("B-c"), std::invalid_argument);
  const TagSequence seq = {"B-a", "E-a", "O", "S-b"};
  EXPECT_EQ(tags.Tags(tags.Indices(seq)), seq);
}

TEST(Constraints, AllowedCountClosedForm) {
  // START: 1+2k, O: 2+2k, B/I: 2 each, E/S: 2+2k each.
  for (int k = 1; k <= 6; ++k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("l" + std::to_string(i));
    EXPECT_EQ(BuildIobesConstraints(TagSet(labels)).CountAllowed(), 3 + 12 * k + 4 * k * k);
  }
}

TEST(Constraints, MaskMatchesStringLegality) {
  TagSet tags({"a", "b"});
  const ConstraintMask mask = BuildIobesConstraints(tags);
  for (const auto& path : oracle::AllPaths(3, tags.size())) {
    EXPECT_EQ(mask.IsLegalPath(path), oracle::LegalIobes(tags.Tags(path)));
  }
}

TEST(Crf, PartitionMatchesEnumeration) {
  Rng rng(21);
  for (int L = 1; L <= 4; ++L) {
    for (int T = 1; T <= 4; ++T) {
      const Instance in = RandomInstance(T, L, rng);
      EXPECT_NEAR(LogPartition(in.emissions, in.transitions),
                  oracle::LogPartition(in.emissions, in.transitions), 1e-10);
    }
  }
}

TEST(Crf, ConstrainedPartitionAndViterbi) {
  Rng rng(22);
  TagSet tags({"a", "b"});
  const ConstraintMask mask = BuildIobesConstraints(tags);
  for (int T = 1; T <= 4; ++T) {
    const Instance in = RandomInstance(T, tags.size(), rng);
    EXPECT_NEAR(LogPartition(in.emissions, in.transitions, &mask),
                oracle::LogPartition(in.emissions, in.transitions, &mask), 1e-10);
    const auto best = Viterbi(in.emissions, in.transitions, &mask);
    EXPECT_TRUE(mask.IsLegalPath(best));
    EXPECT_EQ(best, oracle::BestPath(in.emissions, in.transitions, mask));
  }
}

TEST(Crf, PathScoreMatchesOracle) {
  Rng rng(23);
  const Instance in = RandomInstance(3, 3, rng);
  for (const auto& p : oracle::AllPaths(3, 3)) {
    EXPECT_NEAR(PathScore(in.emissions, in.transitions, p),
                oracle::PathScore(in.emissions, in.transitions, p), 1e-12);
  }
}

TEST(Crf, ViterbiTiesGoToLowerIndex) {
  Tensor emissions({2, 3});
  Tensor transitions({5, 5});
  EXPECT_EQ(Viterbi(emissions, transitions), (std::vector<int>{0, 0}));
}

TEST(Crf, NllGradientIsMarginalsMinusGold) {
  // d logZ / d emis[t][y] = P(y_t = y), by enumeration.
  Rng rng(24);
  const int T = 3;
  const int L = 3;
  Instance in = RandomInstance(T, L, rng);
  const std::vector<int> gold = {2, 0, 1};
  const ConstraintMask all = ConstraintMask::AllowAll(L);
  Tape tape;
  Var nll = CrfNll(tape, tape.Parameter(in.emissions), tape.Parameter(in.transitions), gold, all);
  const double log_z = oracle::LogPartition(in.emissions, in.transitions);
  EXPECT_NEAR(nll.scalar(), log_z - oracle::PathScore(in.emissions, in.transitions, gold), 1e-10);
  tape.Backward(nll);

  std::vector<double> marginal(T * L, 0.0);
  for (const auto& p : oracle::AllPaths(T, L)) {
    const double prob = std::exp(oracle::PathScore(in.emissions, in.transitions, p) - log_z);
    for (int t = 0; t < T; ++t) marginal[t * L + p[t]] += prob;
  }
  for (int t = 0; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      const double expected = marginal[t * L + y] - (gold[t] == y ? 1.0 : 0.0);
      EXPECT_NEAR(in.emissions.grad()[t * L + y], expected, 1e-10);
    }
  }
}

TEST(Crf, NllIsNonNegativeAndRejectsIllegalGold) {
  Rng rng(25);
  TagSet tags({"a"});
  const ConstraintMask mask = BuildIobesConstraints(tags);
  const Instance in = RandomInstance(3, tags.size(), rng);
  Tape tape(false);
  const std::vector<int> gold = {tags.Begin(0), tags.End(0), 0};
  for (bool constrained : {false, true}) {
    Var nll = CrfNll(tape, tape.Constant(in.emissions), tape.Constant(in.transitions), gold, mask,
                     constrained);
    EXPECT_GE(nll.scalar(), 0.0);
  }
  const std::vector<int> illegal = {tags.Inside(0), 0, 0};
  EXPECT_THROW(CrfNll(tape, tape.Constant(in.emissions), tape.Constant(in.transitions), illegal,
                      mask),
               std::invalid_argument);
}

TEST(Crf, ShapeErrors) {
  Tensor emissions({2, 3});
  Tensor wrong({4, 4});
  EXPECT_THROW(CheckCrfShapes(emissions, wrong), std::exception);
}

}  // namespace
}  // namespace spanfeat
