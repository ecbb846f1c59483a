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

#ifndef SPANFEAT_TRAINING_OPTIMIZERS_H_
#define SPANFEAT_TRAINING_OPTIMIZERS_H_

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "spanfeat/core/parameters.h"

namespace spanfeat {

struct SgdMomentumConfig {
  double learning_rate = 0.0015;
  double momentum = 0.9;
  int batch_size = 10;

  void Validate() const;
};

struct AdadeltaConfig {
  double learning_rate = 1.0;
  int batch_size = 50;
  double rho = 0.95;
  double epsilon = 1e-6;

  void Validate() const;
};

using OptimizerConfig = std::variant<SgdMomentumConfig, AdadeltaConfig>;

int BatchSize(const OptimizerConfig& config);

// v <- momentum * v + g; theta <- theta - lr * v. All spans have equal size.
void SgdMomentumStep(std::span<double> params, std::span<const double> grads,
                     std::span<double> velocity, const SgdMomentumConfig& config);

// E[g^2] <- rho E[g^2] + (1 - rho) g^2
// dx = -lr * sqrt(E[dx^2] + eps) / sqrt(E[g^2] + eps) * g
// E[dx^2] <- rho E[dx^2] + (1 - rho) dx^2;  theta <- theta + dx
void AdadeltaStep(std::span<double> params, std::span<const double> grads,
                  std::span<double> grad_sq, std::span<double> delta_sq,
                  const AdadeltaConfig& config);

// Applies one step to every tensor of a store using the accumulated grads.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual void Step(ParameterStore& store) = 0;
};

std::unique_ptr<Optimizer> MakeOptimizer(const OptimizerConfig& config,
                                         const ParameterStore& store);

// Rescales all gradients so their global L2 norm is at most `max_norm`.
// Returns the norm before clipping.
double ClipGradientNorm(ParameterStore& store, double max_norm);

}  // namespace spanfeat

#endif  // SPANFEAT_TRAINING_OPTIMIZERS_H_
