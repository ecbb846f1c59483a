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

#include "spanfeat/crf/crf.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "spanfeat/core/ops.h"

namespace spanfeat {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Transition score with constraints folded in.
class Transitions {
 public:
  Transitions(const Tensor& t, const ConstraintMask* mask) : t_(t), mask_(mask) {}
  double operator()(int from, int to) const {
    if (mask_ != nullptr && !mask_->allowed(from, to)) return kNegInf;
    return t_.at(from, to);
  }

 private:
  const Tensor& t_;
  const ConstraintMask* mask_;
};

void CheckMask(const Tensor& emissions, const ConstraintMask* mask) {
  if (mask != nullptr && mask->num_tags() != emissions.dim(1)) {
    throw ShapeError("crf: constraint mask covers " +
                     std::to_string(mask->num_tags()) + " tags, emissions have " +
                     std::to_string(emissions.dim(1)));
  }
}

// alpha[t][j] = log-sum of scores of prefixes ending in tag j at t,
// emission at t included.
std::vector<double> ForwardScores(const Tensor& emissions, const Transitions& trans,
                                  int start) {
  const int T = emissions.dim(0);
  const int L = emissions.dim(1);
  std::vector<double> alpha(static_cast<size_t>(T) * L);
  for (int j = 0; j < L; ++j) alpha[j] = trans(start, j) + emissions.at(0, j);
  std::vector<double> terms(L);
  for (int t = 1; t < T; ++t) {
    for (int j = 0; j < L; ++j) {
      for (int i = 0; i < L; ++i) {
        terms[i] = alpha[static_cast<size_t>(t - 1) * L + i] + trans(i, j);
      }
      alpha[static_cast<size_t>(t) * L + j] = LogSumExp(terms) + emissions.at(t, j);
    }
  }
  return alpha;
}

}  // namespace

void CheckCrfShapes(const Tensor& emissions, const Tensor& transitions) {
  if (emissions.rank() != 2) {
    throw ShapeError("crf: emissions must be [T x L], got " +
                     emissions.ShapeString());
  }
  const int L = emissions.dim(1);
  if (transitions.rank() != 2 || transitions.dim(0) != L + 2 ||
      transitions.dim(1) != L + 2) {
    throw ShapeError("crf: transitions " + transitions.ShapeString() +
                     " do not match " + std::to_string(L) + " tags (need [" +
                     std::to_string(L + 2) + "x" + std::to_string(L + 2) + "])");
  }
}

double PathScore(const Tensor& emissions, const Tensor& transitions,
                 const std::vector<int>& path) {
  CheckCrfShapes(emissions, transitions);
  const int T = emissions.dim(0);
  const int L = emissions.dim(1);
  if (static_cast<int>(path.size()) != T) {
    throw std::invalid_argument("crf: path length " + std::to_string(path.size()) +
                                " differs from " + std::to_string(T) + " steps");
  }
  int previous = L;  // START
  double score = 0.0;
  for (int t = 0; t < T; ++t) {
    if (path[t] < 0 || path[t] >= L) {
      throw std::invalid_argument("crf: tag index out of range");
    }
    score += transitions.at(previous, path[t]) + emissions.at(t, path[t]);
    previous = path[t];
  }
  return score + transitions.at(previous, L + 1);
}

double LogPartition(const Tensor& emissions, const Tensor& transitions,
                    const ConstraintMask* constraints) {
  CheckCrfShapes(emissions, transitions);
  CheckMask(emissions, constraints);
  const int T = emissions.dim(0);
  const int L = emissions.dim(1);
  Transitions trans(transitions, constraints);
  std::vector<double> alpha = ForwardScores(emissions, trans, L);
  std::vector<double> final_terms(L);
  for (int j = 0; j < L; ++j) {
    final_terms[j] = alpha[static_cast<size_t>(T - 1) * L + j] + trans(j, L + 1);
  }
  return LogSumExp(final_terms);
}

std::vector<int> Viterbi(const Tensor& emissions, const Tensor& transitions,
                         const ConstraintMask* constraints) {
  CheckCrfShapes(emissions, transitions);
  CheckMask(emissions, constraints);
  const int T = emissions.dim(0);
  const int L = emissions.dim(1);
  Transitions trans(transitions, constraints);
  std::vector<double> score(L), next(L);
  std::vector<int> backpointer(static_cast<size_t>(T) * L, 0);
  for (int j = 0; j < L; ++j) score[j] = trans(L, j) + emissions.at(0, j);
  for (int t = 1; t < T; ++t) {
    for (int j = 0; j < L; ++j) {
      double best = kNegInf;
      int best_i = 0;
      for (int i = 0; i < L; ++i) {
        const double s = score[i] + trans(i, j);
        if (s > best) {
          best = s;
          best_i = i;
        }
      }
      next[j] = best + emissions.at(t, j);
      backpointer[static_cast<size_t>(t) * L + j] = best_i;
    }
    std::swap(score, next);
  }
  double best = kNegInf;
  int last = 0;
  for (int j = 0; j < L; ++j) {
    const double s = score[j] + trans(j, L + 1);
    if (s > best) {
      best = s;
      last = j;
    }
  }
  std::vector<int> path(T);
  path[T - 1] = last;
  for (int t = T - 1; t > 0; --t) {
    path[t - 1] = backpointer[static_cast<size_t>(t) * L + path[t]];
  }
  return path;
}

Var CrfNll(Tape& tape, Var emissions, Var transitions, const std::vector<int>& gold,
           const ConstraintMask& legal, bool constrained_partition) {
  const Tensor& emis = emissions.tensor();
  const Tensor& trans_t = transitions.tensor();
  CheckCrfShapes(emis, trans_t);
  CheckMask(emis, &legal);
  const int T = emis.dim(0);
  const int L = emis.dim(1);
  if (static_cast<int>(gold.size()) != T || !legal.IsLegalPath(gold)) {
    throw std::invalid_argument("crf_nll: gold tag sequence is not a legal path");
  }
  const ConstraintMask* mask = constrained_partition ? &legal : nullptr;
  Transitions trans(trans_t, mask);
  std::vector<double> alpha = ForwardScores(emis, trans, L);
  std::vector<double> terms(L);
  for (int j = 0; j < L; ++j) {
    terms[j] = alpha[static_cast<size_t>(T - 1) * L + j] + trans(j, L + 1);
  }
  const double log_z = LogSumExp(terms);
  Var out = tape.Allocate({1});
  out.tensor()[0] = log_z - PathScore(emis, trans_t, gold);

  tape.Record([emissions, transitions, out, gold, mask, alpha = std::move(alpha),
               log_z, T, L]() {
    const double g = out.tensor().grad()[0];
    if (g == 0.0) return;
    const Tensor& emis = emissions.tensor();
    Transitions trans(transitions.tensor(), mask);
    // beta[t][i]: log-sum of suffix scores after position t given tag i,
    // emission at t excluded.
    std::vector<double> beta(static_cast<size_t>(T) * L);
    std::vector<double> terms(L);
    for (int i = 0; i < L; ++i) {
      beta[static_cast<size_t>(T - 1) * L + i] = trans(i, L + 1);
    }
    for (int t = T - 2; t >= 0; --t) {
      for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
          terms[j] = trans(i, j) + emis.at(t + 1, j) +
                     beta[static_cast<size_t>(t + 1) * L + j];
        }
        beta[static_cast<size_t>(t) * L + i] = LogSumExp(terms);
      }
    }
    auto eg = emissions.tensor().grad();
    Tensor& tt = transitions.tensor();
    auto tg = tt.grad();
    const int D = L + 2;
    auto add_trans = [&](int from, int to, double v) {
      tg[static_cast<size_t>(from) * D + to] += v;
    };
    for (int t = 0; t < T; ++t) {
      for (int j = 0; j < L; ++j) {
        const size_t k = static_cast<size_t>(t) * L + j;
        const double marginal = std::exp(alpha[k] + beta[k] - log_z);
        eg[k] += g * marginal;
        if (t == 0) add_trans(L, j, g * marginal);
        if (t == T - 1) add_trans(j, L + 1, g * marginal);
      }
      if (t == 0) continue;
      for (int i = 0; i < L; ++i) {
        const double a = alpha[static_cast<size_t>(t - 1) * L + i];
        for (int j = 0; j < L; ++j) {
          const double s = trans(i, j);
          if (std::isinf(s)) continue;
          const size_t k = static_cast<size_t>(t) * L + j;
          add_trans(i, j, g * std::exp(a + s + emis.at(t, j) + beta[k] - log_z));
        }
      }
    }
    int previous = L;
    for (int t = 0; t < T; ++t) {
      eg[static_cast<size_t>(t) * L + gold[t]] -= g;
      add_trans(previous, gold[t], -g);
      previous = gold[t];
    }
    add_trans(previous, L + 1, -g);
  });
  return out;
}

}  // namespace spanfeat
