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

#ifndef SPANFEAT_CRF_CRF_H_
#define SPANFEAT_CRF_CRF_H_

#include <vector>

#include "spanfeat/core/tape.h"
#include "spanfeat/crf/tag_set.h"

// Linear-chain CRF over emissions [T x L] and transitions [(L+2) x (L+2)],
// where row/column L is START and L+1 is END. The score of a path y is
//   trans[START][y0] + sum_t emis[t][y_t] + sum_t trans[y_{t-1}][y_t]
//   + trans[y_{T-1}][END].
// Passing a ConstraintMask treats disallowed transitions as -inf.

namespace spanfeat {

void CheckCrfShapes(const Tensor& emissions, const Tensor& transitions);

double PathScore(const Tensor& emissions, const Tensor& transitions,
                 const std::vector<int>& path);

double LogPartition(const Tensor& emissions, const Tensor& transitions,
                    const ConstraintMask* constraints = nullptr);

// Highest-scoring path; on ties the lower tag index wins at every
// backpointer and at the final position.
std::vector<int> Viterbi(const Tensor& emissions, const Tensor& transitions,
                         const ConstraintMask* constraints = nullptr);

// log Z - score(gold). `legal` validates the gold path; the partition sums
// over legal paths only when `constrained_partition` is set. Throws
// std::invalid_argument for a gold path that `legal` rejects.
Var CrfNll(Tape& tape, Var emissions, Var transitions, const std::vector<int>& gold,
           const ConstraintMask& legal, bool constrained_partition = false);

}  // namespace spanfeat

#endif  // SPANFEAT_CRF_CRF_H_
