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

#ifndef SPANFEAT_TRAINING_TRAINER_H_
#define SPANFEAT_TRAINING_TRAINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanfeat/core/tape.h"
#include "spanfeat/training/optimizers.h"

namespace spanfeat {

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What the loop needs from a model/data pairing.
class TrainingTask {
 public:
  virtual ~TrainingTask() = default;

  virtual ParameterStore& params() = 0;
  virtual size_t num_examples() const = 0;
  virtual Var Loss(Tape& tape, size_t example) const = 0;
  // Higher is better; nullopt when there is no dev data.
  virtual std::optional<double> DevMetric() const = 0;
  virtual double TrainAccuracy() const = 0;
  // Called once after the selected parameters are restored.
  virtual void Finish() = 0;
};

struct TrainSchedule {
  int epochs = 30;
  std::uint64_t seed = 7;
  // Global gradient-norm clip; nullopt disables it.
  std::optional<double> clip_norm;
  // Restore the parameters of the epoch with the best dev metric.
  bool keep_best = true;
  // Also compute training accuracy after every epoch.
  bool track_train_accuracy = false;
};

struct EpochRecord {
  int epoch = 0;                   // 1-based
  double train_loss = 0;           // mean per-example loss
  std::optional<double> dev_metric;
  std::optional<double> train_accuracy;
};

struct TrainingHistory {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;  // 0 when no dev metric was available

  // One JSON object per epoch.
  std::string ToJsonLines() const;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

// Mini-batch training: the example order is reshuffled every epoch with an
// RNG seeded from the schedule, each batch loss is the batch mean, and one
// optimizer step follows each batch. Throws TrainingError on an empty task
// or a non-finite loss.
TrainingHistory Train(TrainingTask& task, const OptimizerConfig& optimizer,
                      const TrainSchedule& schedule, const EpochCallback& on_epoch = {});

}  // namespace spanfeat

#endif  // SPANFEAT_TRAINING_TRAINER_H_
