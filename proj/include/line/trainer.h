// Copyright 2026 The LINE Embedding Authors.
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

#ifndef LINE_TRAINER_H_
#define LINE_TRAINER_H_

#include <cstdint>
#include <iosfwd>

#include "line/embedding.h"
#include "line/graph.h"
#include "line/model.h"

namespace line {

struct TrainProgress {
  std::uint64_t samples_done = 0;
  double current_rho = 0.0;
  // Exponential moving average (decay 0.999) of the per-sample loss.
  double running_loss = 0.0;
};

struct TrainHooks {
  // Receives `samples=<n> rho=<r> loss=<l>` every 10^4 samples.
  std::ostream* progress = nullptr;
  // Filled with the state after the last sample.
  TrainProgress* final_progress = nullptr;
};

// max(rho0 * (1 - t / T), rho0 * 1e-4).
double learning_rate(double rho0, std::uint64_t t, std::uint64_t total);

// Edge-sampling trainer: arcs are drawn proportionally to their weight and
// treated as binary. Runs exactly cfg.total_samples updates split over
// cfg.threads lock-free workers sharing one embedding matrix. Returns the
// unnormalized model. Single-threaded runs are bit-reproducible for a seed.
EmbeddingMatrix train(const Graph& g, const TrainConfig& cfg,
                      const TrainHooks& hooks = {});

// Plain SGD baseline: arcs drawn uniformly and w_ij multiplied into every
// gradient, each per-parameter gradient clipped to +-gradient_clip.
EmbeddingMatrix train_line_sgd(const Graph& g, const TrainConfig& cfg,
                               double gradient_clip,
                               const TrainHooks& hooks = {});

}  // namespace line

#endif  // LINE_TRAINER_H_
