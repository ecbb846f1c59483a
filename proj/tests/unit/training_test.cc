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

#include <algorithm>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "spanfeat/core/ops.h"
#include "spanfeat/core/parameters.h"
#include "spanfeat/core/tape.h"
#include "spanfeat/training/optimizers.h"
#include "spanfeat/training/trainer.h"

namespace spanfeat {
namespace {

TEST(Sgd, HandComputedStep) {
  std::vector<double> p = {1.0, 2.0};
  const std::vector<double> g = {0.5, -1.0};
  std::vector<double> v = {0.1, 0.0};
  SgdMomentumConfig c;
  c.learning_rate = 0.1;
  c.momentum = 0.9;
  SgdMomentumStep(p, g, v, c);
  EXPECT_NEAR(v[0], 0.59, 1e-15);
  EXPECT_NEAR(v[1], -1.0, 1e-15);
  EXPECT_NEAR(p[0], 1.0 - 0.059, 1e-15);
  EXPECT_NEAR(p[1], 2.1, 1e-15);
}

TEST(Adadelta, HandComputedSteps) {
  std::vector<double> p = {0.0};
  std::vector<double> g2 = {0.0};
  std::vector<double> d2 = {0.0};
  AdadeltaConfig c;
  const std::vector<double> g = {2.0};
  AdadeltaStep(p, g, g2, d2, c);
  const double eg2 = 0.05 * 4.0;
  const double dx = -std::sqrt(1e-6) / std::sqrt(eg2 + 1e-6) * 2.0;
  EXPECT_NEAR(g2[0], eg2, 1e-15);
  EXPECT_NEAR(p[0], dx, 1e-15);
  EXPECT_NEAR(d2[0], 0.05 * dx * dx, 1e-20);

  // Second step with the accumulated state.
  AdadeltaStep(p, g, g2, d2, c);
  const double eg2b = 0.95 * eg2 + 0.05 * 4.0;
  const double dxb = -std::sqrt(0.05 * dx * dx + 1e-6) / std::sqrt(eg2b + 1e-6) * 2.0;
  EXPECT_NEAR(p[0], dx + dxb, 1e-15);
}

TEST(Adadelta, LearningRateScalesTheDelta) {
  std::vector<double> p = {0.0};
  std::vector<double> g2 = {0.0};
  std::vector<double> d2 = {0.0};
  AdadeltaConfig c;
  c.learning_rate = 0.5;
  const std::vector<double> g = {1.0};
  AdadeltaStep(p, g, g2, d2, c);
  EXPECT_NEAR(p[0], -0.5 * std::sqrt(1e-6) / std::sqrt(0.05 + 1e-6), 1e-15);
}

TEST(OptimizerConfig, Validation) {
  SgdMomentumConfig s;
  s.learning_rate = -1;
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  AdadeltaConfig a;
  a.rho = 1.0;
  EXPECT_THROW(a.Validate(), std::invalid_argument);
  a = AdadeltaConfig{};
  a.batch_size = 0;
  EXPECT_THROW(a.Validate(), std::invalid_argument);
  EXPECT_EQ(BatchSize(OptimizerConfig{AdadeltaConfig{}}), 50);
  EXPECT_EQ(BatchSize(OptimizerConfig{SgdMomentumConfig{}}), 10);
}

TEST(ClipGradientNorm, RescalesOnlyAboveThreshold) {
  ParameterStore store;
  Tensor& a = store.Create("a", {1});
  Tensor& b = store.Create("b", {1});
  a.grad()[0] = 3;
  b.grad()[0] = 4;
  EXPECT_DOUBLE_EQ(ClipGradientNorm(store, 10.0), 5.0);
  EXPECT_DOUBLE_EQ(a.grad()[0], 3.0);
  EXPECT_DOUBLE_EQ(ClipGradientNorm(store, 1.0), 5.0);
  EXPECT_NEAR(a.grad()[0], 0.6, 1e-15);
  EXPECT_NEAR(b.grad()[0], 0.8, 1e-15);
}

// Two-way softmax over one parameter vector; example i has gold label
// golds[i]. Optionally scripts the dev metric per epoch.
class ToyTask : public TrainingTask {
 public:
  explicit ToyTask(std::vector<int> golds, std::vector<double> dev_script = {})
      : golds_(std::move(golds)), dev_script_(std::move(dev_script)) {
    weights_ = &store_.Create("w", {2});
  }

  ParameterStore& params() override { return store_; }
  size_t num_examples() const override { return golds_.size(); }
  Var Loss(Tape& tape, size_t i) const override {
    if (poison_) return tape.Constant(Tensor::Scalar(std::numeric_limits<double>::quiet_NaN()));
    return SoftmaxCrossEntropy(tape, tape.Parameter(*weights_), golds_[i]);
  }
  std::optional<double> DevMetric() const override {
    if (dev_script_.empty()) return std::nullopt;
    return dev_script_.at(dev_calls_++);
  }
  double TrainAccuracy() const override { return weights_->values()[1] > weights_->values()[0]; }
  void Finish() override { finished_ = true; }

  std::vector<double> weights() const {
    const auto v = weights_->values();
    return {v.begin(), v.end()};
  }
  bool finished() const { return finished_; }
  void Poison() { poison_ = true; }

 private:
  ParameterStore store_;
  Tensor* weights_;
  std::vector<int> golds_;
  std::vector<double> dev_script_;
  mutable size_t dev_calls_ = 0;
  bool finished_ = false;
  bool poison_ = false;
};

TEST(Trainer, LossDecreasesAndHistoryHasOneRowPerEpoch) {
  ToyTask task({1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1});
  TrainSchedule s;
  s.epochs = 8;
  s.track_train_accuracy = true;
  AdadeltaConfig opt;
  opt.batch_size = 4;
  const TrainingHistory h = Train(task, opt, s);
  ASSERT_EQ(h.epochs.size(), 8u);
  EXPECT_EQ(h.epochs.front().epoch, 1);
  EXPECT_LT(h.epochs.back().train_loss, h.epochs.front().train_loss);
  EXPECT_EQ(h.epochs.back().train_accuracy, 1.0);
  EXPECT_EQ(h.best_epoch, 0);
  EXPECT_TRUE(task.finished());
  const std::string lines = h.ToJsonLines();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 8);
}

TEST(Trainer, DeterministicUnderSeed) {
  auto run = [](uint64_t seed) {
    ToyTask task({1, 0, 1, 1, 0, 1, 0});
    TrainSchedule s;
    s.epochs = 3;
    s.seed = seed;
    SgdMomentumConfig opt;
    opt.batch_size = 2;
    opt.learning_rate = 0.1;
    Train(task, opt, s);
    return task.weights();
  };
  EXPECT_EQ(run(3), run(3));
}

TEST(Trainer, RestoresBestDevEpoch) {
  ToyTask task({1, 1, 1, 1}, {0.1, 0.9, 0.5});
  TrainSchedule s;
  s.epochs = 3;
  std::vector<std::vector<double>> after_epoch;
  const TrainingHistory h = Train(task, AdadeltaConfig{}, s, [&](const EpochRecord&) {
    after_epoch.push_back(task.weights());
  });
  EXPECT_EQ(h.best_epoch, 2);
  ASSERT_EQ(after_epoch.size(), 3u);
  EXPECT_NE(after_epoch[1], after_epoch[2]);
  EXPECT_EQ(task.weights(), after_epoch[1]);
}

TEST(Trainer, RejectsEmptyTaskAndNonFiniteLoss) {
  ToyTask empty({});
  EXPECT_THROW(Train(empty, AdadeltaConfig{}, TrainSchedule{}), TrainingError);
  ToyTask poisoned({1, 0});
  poisoned.Poison();
  EXPECT_THROW(Train(poisoned, AdadeltaConfig{}, TrainSchedule{}), TrainingError);
}

}  // namespace
}  // namespace spanfeat
