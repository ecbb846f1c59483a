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

#include "spanfeat/training/optimizers.h"

#include <cmath>
#include <stdexcept>

namespace spanfeat {

void SgdMomentumConfig::Validate() const {
  if (!(learning_rate > 0)) throw std::invalid_argument("learning rate must be > 0");
  if (!(momentum >= 0 && momentum < 1)) {
    throw std::invalid_argument("momentum must be in [0, 1)");
  }
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
}

void AdadeltaConfig::Validate() const {
  if (!(learning_rate > 0)) throw std::invalid_argument("learning rate must be > 0");
  if (!(rho > 0 && rho < 1)) throw std::invalid_argument("rho must be in (0, 1)");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be > 0");
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
}

int BatchSize(const OptimizerConfig& config) {
  return std::visit([](const auto& c) { return c.batch_size; }, config);
}

namespace {

void CheckSizes(size_t n, std::initializer_list<size_t> others) {
  for (size_t m : others) {
    if (m != n) throw std::invalid_argument("optimizer state size mismatch");
  }
}

}  // namespace

void SgdMomentumStep(std::span<double> params, std::span<const double> grads,
                     std::span<double> velocity, const SgdMomentumConfig& config) {
  CheckSizes(params.size(), {grads.size(), velocity.size()});
  for (size_t i = 0; i < params.size(); ++i) {
    velocity[i] = config.momentum * velocity[i] + grads[i];
    params[i] -= config.learning_rate * velocity[i];
  }
}

void AdadeltaStep(std::span<double> params, std::span<const double> grads,
                  std::span<double> grad_sq, std::span<double> delta_sq,
                  const AdadeltaConfig& config) {
  CheckSizes(params.size(), {grads.size(), grad_sq.size(), delta_sq.size()});
  const double rho = config.rho;
  const double eps = config.epsilon;
  for (size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    grad_sq[i] = rho * grad_sq[i] + (1 - rho) * g * g;
    const double dx =
        -config.learning_rate * std::sqrt(delta_sq[i] + eps) / std::sqrt(grad_sq[i] + eps) * g;
    delta_sq[i] = rho * delta_sq[i] + (1 - rho) * dx * dx;
    params[i] += dx;
  }
}

namespace {

std::vector<std::vector<double>> ZeroState(const ParameterStore& store) {
  std::vector<std::vector<double>> state;
  state.reserve(store.size());
  for (size_t i = 0; i < store.size(); ++i) state.emplace_back(store.tensor(i).size(), 0.0);
  return state;
}

class SgdMomentum : public Optimizer {
 public:
  SgdMomentum(const SgdMomentumConfig& config, const ParameterStore& store)
      : config_(config), velocity_(ZeroState(store)) {}

  void Step(ParameterStore& store) override {
    for (size_t i = 0; i < store.size(); ++i) {
      Tensor& t = store.tensor(i);
      SgdMomentumStep(t.values(), t.grad(), velocity_[i], config_);
    }
  }

 private:
  SgdMomentumConfig config_;
  std::vector<std::vector<double>> velocity_;
};

class Adadelta : public Optimizer {
 public:
  Adadelta(const AdadeltaConfig& config, const ParameterStore& store)
      : config_(config), grad_sq_(ZeroState(store)), delta_sq_(ZeroState(store)) {}

  void Step(ParameterStore& store) override {
    for (size_t i = 0; i < store.size(); ++i) {
      Tensor& t = store.tensor(i);
      AdadeltaStep(t.values(), t.grad(), grad_sq_[i], delta_sq_[i], config_);
    }
  }

 private:
  AdadeltaConfig config_;
  std::vector<std::vector<double>> grad_sq_;
  std::vector<std::vector<double>> delta_sq_;
};

}  // namespace

std::unique_ptr<Optimizer> MakeOptimizer(const OptimizerConfig& config,
                                         const ParameterStore& store) {
  if (const auto* sgd = std::get_if<SgdMomentumConfig>(&config)) {
    sgd->Validate();
    return std::make_unique<SgdMomentum>(*sgd, store);
  }
  const auto& ada = std::get<AdadeltaConfig>(config);
  ada.Validate();
  return std::make_unique<Adadelta>(ada, store);
}

double ClipGradientNorm(ParameterStore& store, double max_norm) {
  double sq = 0;
  for (size_t i = 0; i < store.size(); ++i) {
    for (double g : store.tensor(i).grad()) sq += g * g;
  }
  const double norm = std::sqrt(sq);
  if (norm > max_norm && norm > 0) {
    const double scale = max_norm / norm;
    for (size_t i = 0; i < store.size(); ++i) {
      for (double& g : store.tensor(i).grad()) g *= scale;
    }
  }
  return norm;
}

}  // namespace spanfeat
