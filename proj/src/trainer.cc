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

#include "line/trainer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "line/alias_table.h"
#include "line/errors.h"

namespace line {
namespace {

constexpr std::uint64_t kCounterBatch = 256;
constexpr std::uint64_t kReportEvery = 10'000;
constexpr double kLossDecay = 0.999;

struct SharedState {
  const Graph& graph;
  const TrainConfig& cfg;
  const EdgeSampler& edges;
  const NoiseDistribution& noise;
  EmbeddingMatrix& model;
  const TrainHooks& hooks;
  bool weighted_gradients;
  double clip;
  std::atomic<std::uint64_t> step{0};
  std::mutex report_mutex;
};

TrainProgress run_worker(SharedState& shared, int worker,
                         std::uint64_t quota) {
  const TrainConfig& cfg = shared.cfg;
  Rng rng(cfg.seed + static_cast<std::uint64_t>(worker));
  const auto arcs = shared.graph.arcs();
  StepOptions options;
  options.clip = shared.clip;

  TrainProgress progress;
  bool loss_seeded = false;
  std::uint64_t done = 0;
  while (done < quota) {
    const std::uint64_t batch = std::min(kCounterBatch, quota - done);
    const std::uint64_t base =
        shared.step.fetch_add(batch, std::memory_order_relaxed);
    for (std::uint64_t offset = 0; offset < batch; ++offset) {
      const std::uint64_t t = base + offset;
      const double rho = learning_rate(cfg.rho0, t, cfg.total_samples);
      const Arc& arc = arcs[shared.edges.draw(rng)];
      if (shared.weighted_gradients) options.weight = arc.weight;
      const double loss =
          sgd_step(shared.model, cfg.order, arc.source, arc.target,
                   shared.noise, cfg.negatives, rho, rng, options);
      if (loss_seeded) {
        progress.running_loss =
            kLossDecay * progress.running_loss + (1.0 - kLossDecay) * loss;
      } else {
        progress.running_loss = loss;
        loss_seeded = true;
      }
      progress.current_rho = rho;
      if (shared.hooks.progress != nullptr && (t + 1) % kReportEvery == 0) {
        std::lock_guard lock(shared.report_mutex);
        *shared.hooks.progress << "samples=" << t + 1 << " rho=" << rho
                               << " loss=" << progress.running_loss << '\n';
      }
    }
    done += batch;
  }
  progress.samples_done = done;
  return progress;
}

EmbeddingMatrix run_training(const Graph& g, const TrainConfig& cfg,
                             const EdgeSampler& edges, bool weighted_gradients,
                             double clip, const TrainHooks& hooks) {
  cfg.validate();
  if (cfg.order == Order::kFirst && !g.undirected()) {
    throw UsageError(
        "first-order proximity is only defined for undirected graphs");
  }
  NoiseDistribution noise(g);
  Rng init_rng(cfg.seed);
  EmbeddingMatrix model = init_embeddings(g.num_vertices(), cfg, init_rng);

  SharedState shared{g,     cfg,   edges,
                     noise, model, hooks,
                     weighted_gradients, clip, {0}, {}};
  const auto workers = static_cast<std::uint64_t>(cfg.threads);
  auto quota = [&](std::uint64_t w) {
    return cfg.total_samples / workers + (w < cfg.total_samples % workers);
  };

  std::vector<TrainProgress> progress(workers);
  if (workers == 1) {
    progress[0] = run_worker(shared, 0, quota(0));
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        progress[w] = run_worker(shared, static_cast<int>(w), quota(w));
      });
    }
  }

  if (hooks.final_progress != nullptr) {
    TrainProgress summary = progress[0];
    summary.samples_done = shared.step.load();
    summary.current_rho =
        learning_rate(cfg.rho0, cfg.total_samples - 1, cfg.total_samples);
    *hooks.final_progress = summary;
  }
  return model;
}

}  // namespace

double learning_rate(double rho0, std::uint64_t t, std::uint64_t total) {
  const double scheduled =
      rho0 * (1.0 - static_cast<double>(t) / static_cast<double>(total));
  return std::max(scheduled, rho0 * 1e-4);
}

EmbeddingMatrix train(const Graph& g, const TrainConfig& cfg,
                      const TrainHooks& hooks) {
  const EdgeSampler edges = EdgeSampler::weighted(g);
  return run_training(g, cfg, edges, false,
                      std::numeric_limits<double>::infinity(), hooks);
}

EmbeddingMatrix train_line_sgd(const Graph& g, const TrainConfig& cfg,
                               double gradient_clip, const TrainHooks& hooks) {
  if (!(gradient_clip > 0.0)) {
    throw UsageError("gradient clip must be positive");
  }
  const EdgeSampler edges = EdgeSampler::uniform(g);
  return run_training(g, cfg, edges, true, gradient_clip, hooks);
}

}  // namespace line
