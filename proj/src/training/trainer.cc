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

#include "spanfeat/training/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace spanfeat {

std::string TrainingHistory::ToJsonLines() const {
  std::ostringstream out;
  for (const EpochRecord& r : epochs) {
    nlohmann::ordered_json j;
    j["epoch"] = r.epoch;
    j["train_loss"] = r.train_loss;
    j["dev_metric"] = r.dev_metric ? nlohmann::ordered_json(*r.dev_metric) : nullptr;
    if (r.train_accuracy) j["train_accuracy"] = *r.train_accuracy;
    out << j.dump() << '\n';
  }
  return out.str();
}

TrainingHistory Train(TrainingTask& task, const OptimizerConfig& optimizer,
                      const TrainSchedule& schedule, const EpochCallback& on_epoch) {
  const size_t n = task.num_examples();
  if (n == 0) throw TrainingError("cannot train on an empty corpus");
  if (schedule.epochs < 1) throw TrainingError("epochs must be >= 1");

  ParameterStore& params = task.params();
  auto opt = MakeOptimizer(optimizer, params);
  const size_t batch = static_cast<size_t>(BatchSize(optimizer));
  Rng rng(schedule.seed);
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainingHistory history;
  std::optional<double> best_metric;
  std::vector<std::vector<double>> best_params;

  for (int epoch = 1; epoch <= schedule.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double loss_sum = 0;
    for (size_t begin = 0; begin < n; begin += batch) {
      const size_t end = std::min(n, begin + batch);
      const double weight = 1.0 / static_cast<double>(end - begin);
      params.ZeroGrad();
      for (size_t b = begin; b < end; ++b) {
        Tape tape;
        Var loss = task.Loss(tape, order[b]);
        const double value = loss.scalar();
        if (!std::isfinite(value)) {
          std::ostringstream msg;
          msg << "non-finite loss " << value << " at epoch " << epoch << ", example "
              << order[b];
          throw TrainingError(msg.str());
        }
        loss_sum += value;
        tape.Backward(loss, weight);
      }
      if (schedule.clip_norm) ClipGradientNorm(params, *schedule.clip_norm);
      opt->Step(params);
    }
    params.ZeroGrad();

    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = loss_sum / static_cast<double>(n);
    record.dev_metric = task.DevMetric();
    if (schedule.track_train_accuracy) record.train_accuracy = task.TrainAccuracy();
    if (record.dev_metric && (!best_metric || *record.dev_metric > *best_metric)) {
      best_metric = record.dev_metric;
      history.best_epoch = epoch;
      if (schedule.keep_best) best_params = params.Snapshot();
    }
    history.epochs.push_back(record);
    if (on_epoch) on_epoch(record);
  }

  if (schedule.keep_best && !best_params.empty()) params.Restore(best_params);
  task.Finish();
  return history;
}

}  // namespace spanfeat
