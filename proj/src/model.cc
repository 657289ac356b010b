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

#include "line/model.h"

#include <algorithm>
#include <cmath>

#include "line/errors.h"

namespace line {
namespace {

constexpr double kSigmoidBound = 35.0;
constexpr int kMaxInlineNegatives = 64;

double clamp_gradient(double g, double clip) {
  return std::min(std::max(g, -clip), clip);
}

// -log sigma(x), stable for large |x|.
double softplus_neg(double x) {
  return x > 0.0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}

std::vector<double>& error_buffer(std::size_t dim) {
  thread_local std::vector<double> buffer;
  buffer.assign(dim, 0.0);
  return buffer;
}

// Partial update of one target row: returns this target's contribution to
// the loss and accumulates the source gradient into `error`.
template <bool kClip>
double update_target(std::span<const double> source, double* target,
                     double label, double rho, const StepOptions& options,
                     std::span<double> error) {
  const std::size_t dim = source.size();
  double x = 0.0;
  for (std::size_t c = 0; c < dim; ++c) x += source[c] * target[c];
  const double s = sigmoid(x);
  const double g = (label - s) * options.weight;
  for (std::size_t c = 0; c < dim; ++c) error[c] += g * target[c];
  if (!options.freeze_targets) {
    for (std::size_t c = 0; c < dim; ++c) {
      double grad = g * source[c];
      if constexpr (kClip) grad = clamp_gradient(grad, options.clip);
      target[c] += rho * grad;
    }
  }
  return label > 0.5 ? -std::log(s) : -std::log1p(-s);
}

template <bool kClip>
double step(std::span<double> source, double* targets, std::size_t dim,
            VertexId positive, std::span<const VertexId> negatives, double rho,
            const StepOptions& options) {
  std::span<double> error = error_buffer(dim);
  double loss = update_target<kClip>(
      source, targets + static_cast<std::size_t>(positive) * dim, 1.0, rho,
      options, error);
  for (VertexId n : negatives) {
    loss += update_target<kClip>(
        source, targets + static_cast<std::size_t>(n) * dim, 0.0, rho, options,
        error);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    double grad = error[c];
    if constexpr (kClip) grad = clamp_gradient(grad, options.clip);
    source[c] += rho * grad;
  }
  return loss;
}

double dispatch(std::span<double> source, double* targets, std::size_t dim,
                VertexId positive, std::span<const VertexId> negatives,
                double rho, const StepOptions& options) {
  if (std::isinf(options.clip) && options.clip > 0.0) {
    return step<false>(source, targets, dim, positive, negatives, rho, options);
  }
  return step<true>(source, targets, dim, positive, negatives, rho, options);
}

double* target_rows(EmbeddingMatrix& m, Order order) {
  if (order == Order::kSecond) {
    if (!m.has_context()) {
      throw UsageError("second-order update on a model without contexts");
    }
    return m.context_data().data();
  }
  return m.vertex_data().data();
}

}  // namespace

void TrainConfig::validate() const {
  if (order != Order::kFirst && order != Order::kSecond) {
    throw UsageError("order must be 1 or 2");
  }
  if (dim < 1) throw UsageError("dim must be at least 1");
  if (negatives < 0) throw UsageError("negatives must be non-negative");
  if (total_samples < 1) throw UsageError("total_samples must be at least 1");
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) {
    throw UsageError("rho0 must be positive");
  }
  if (threads < 1) throw UsageError("threads must be at least 1");
}

std::uint64_t default_total_samples(const Graph& g, int negatives) {
  return 100U * static_cast<std::uint64_t>(g.num_arcs()) *
         static_cast<std::uint64_t>(negatives + 1);
}

EmbeddingMatrix init_embeddings(std::size_t num_vertices,
                                const TrainConfig& cfg, Rng& rng) {
  EmbeddingMatrix m(num_vertices, cfg.dim, cfg.order == Order::kSecond);
  const double scale = 1.0 / static_cast<double>(cfg.dim);
  for (double& x : m.vertex_data()) x = (rng.uniform() - 0.5) * scale;
  return m;
}

double sigmoid(double x) {
  x = std::clamp(x, -kSigmoidBound, kSigmoidBound);
  return 1.0 / (1.0 + std::exp(-x));
}

double p1(const EmbeddingMatrix& m, VertexId i, VertexId j) {
  return sigmoid(dot(m.vertex(i), m.vertex(j)));
}

std::vector<double> p2_row(const EmbeddingMatrix& m, VertexId i) {
  if (!m.has_context()) {
    throw UsageError("p2 needs a second-order model with context vectors");
  }
  const std::size_t n = m.num_vertices();
  std::vector<double> row(n);
  auto u = m.vertex(i);
  double max_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    row[k] = dot(m.context(static_cast<VertexId>(k)), u);
    max_logit = std::max(max_logit, row[k]);
  }
  double sum = 0.0;
  for (double& x : row) {
    x = std::exp(x - max_logit);
    sum += x;
  }
  for (double& x : row) x /= sum;
  return row;
}

double objective_first(const Graph& g, const EmbeddingMatrix& m) {
  if (!g.undirected()) {
    throw UsageError(
        "first-order proximity is only defined for undirected graphs");
  }
  double total = 0.0;
  for (const Arc& arc : g.arcs()) {
    total += arc.weight *
             softplus_neg(dot(m.vertex(arc.source), m.vertex(arc.target)));
  }
  return total;
}

double objective_second(const Graph& g, const EmbeddingMatrix& m) {
  if (!m.has_context()) {
    throw UsageError("second-order objective needs context vectors");
  }
  const std::size_t n = m.num_vertices();
  std::vector<double> logits(n);
  double total = 0.0;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    auto arcs = g.out_arcs(i);
    if (arcs.empty()) continue;
    auto u = m.vertex(i);
    double max_logit = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      logits[k] = dot(m.context(static_cast<VertexId>(k)), u);
      max_logit = std::max(max_logit, logits[k]);
    }
    double sum = 0.0;
    for (double x : logits) sum += std::exp(x - max_logit);
    const double log_normalizer = max_logit + std::log(sum);
    for (const Arc& arc : arcs) {
      total -= arc.weight * (logits[arc.target] - log_normalizer);
    }
  }
  return total;
}

double sgd_step(EmbeddingMatrix& m, Order order, VertexId source,
                VertexId target, std::span<const VertexId> negatives,
                double rho, const StepOptions& options) {
  return dispatch(m.vertex(source), target_rows(m, order), m.dim(), target,
                  negatives, rho, options);
}

double sgd_step(EmbeddingMatrix& m, Order order, VertexId source,
                VertexId target, const NoiseDistribution& noise, int negatives,
                double rho, Rng& rng, const StepOptions& options) {
  VertexId inline_draws[kMaxInlineNegatives];
  std::vector<VertexId> heap_draws;
  std::span<VertexId> draws;
  const auto k = static_cast<std::size_t>(negatives);
  if (negatives <= kMaxInlineNegatives) {
    draws = std::span<VertexId>(inline_draws, k);
  } else {
    heap_draws.resize(k);
    draws = heap_draws;
  }
  for (VertexId& n : draws) n = noise.draw(rng);
  return sgd_step(m, order, source, target, draws, rho, options);
}

double sgd_step_detached(std::span<double> source, const EmbeddingMatrix& m,
                         Order order, VertexId target,
                         std::span<const VertexId> negatives, double rho) {
  if (source.size() != m.dim()) {
    throw UsageError("detached source has the wrong dimension");
  }
  if (order == Order::kSecond && !m.has_context()) {
    throw UsageError("second-order update on a model without contexts");
  }
  StepOptions options;
  options.freeze_targets = true;
  // Targets are never written when frozen.
  auto* rows = const_cast<double*>(order == Order::kSecond
                                       ? m.context_data().data()
                                       : m.vertex_data().data());
  return step<false>(source, rows, m.dim(), target, negatives, rho, options);
}

}  // namespace line
