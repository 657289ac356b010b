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

#ifndef LINE_MODEL_H_
#define LINE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "line/alias_table.h"
#include "line/embedding.h"
#include "line/graph.h"
#include "line/rng.h"

namespace line {

enum class Order { kFirst = 1, kSecond = 2 };

struct TrainConfig {
  Order order = Order::kSecond;
  std::size_t dim = 128;
  int negatives = 5;
  std::uint64_t total_samples = 1'000'000;
  double rho0 = 0.025;
  int threads = 1;
  std::uint64_t seed = 42;

  // Throws UsageError when a field is out of range.
  void validate() const;
};

// Tooling default for the sample budget: 100 * |E| * (K + 1).
std::uint64_t default_total_samples(const Graph& g, int negatives);

// Vertex rows uniform in [-0.5/d, 0.5/d]; context rows (second order only)
// start at zero.
EmbeddingMatrix init_embeddings(std::size_t num_vertices,
                                const TrainConfig& cfg, Rng& rng);

// 1 / (1 + exp(-x)) with x clamped to [-35, 35].
double sigmoid(double x);

// First-order joint probability sigma(u_i . u_j).
double p1(const EmbeddingMatrix& m, VertexId i, VertexId j);

// Second-order conditional distribution p2(. | v_i): softmax over
// u'_k . u_i. O(|V| d). Throws UsageError on a model without contexts.
std::vector<double> p2_row(const EmbeddingMatrix& m, VertexId i);

// -sum_{(i,j)} w_ij log p1(v_i, v_j) over stored arcs. Undirected only.
double objective_first(const Graph& g, const EmbeddingMatrix& m);

// -sum_{(i,j)} w_ij log p2(v_j | v_i) with exact softmax rows.
double objective_second(const Graph& g, const EmbeddingMatrix& m);

// Knobs for the per-edge update. The defaults give the edge-sampling update;
// weight and clip reproduce the weight-multiplied gradient of plain SGD.
struct StepOptions {
  // Multiplies every gradient of the step.
  double weight = 1.0;
  // Per-parameter gradient magnitude cap.
  double clip = std::numeric_limits<double>::infinity();
  // Leave target rows (context or vertex) untouched; only the source moves.
  bool freeze_targets = false;
};

// One stochastic ascent step on
//   log sigma(t_j . u_i) + sum_n log sigma(-t_n . u_i)
// where t is the context row (second order) or vertex row (first order).
// Targets are updated in turn; u_i receives the accumulated gradient after
// all of them. Returns the negated objective at the realized draws.
double sgd_step(EmbeddingMatrix& m, Order order, VertexId source,
                VertexId target, std::span<const VertexId> negatives,
                double rho, const StepOptions& options = {});

// As above, drawing `negatives` noise vertices from `noise`.
double sgd_step(EmbeddingMatrix& m, Order order, VertexId source,
                VertexId target, const NoiseDistribution& noise, int negatives,
                double rho, Rng& rng, const StepOptions& options = {});

// Same update for a source vector that lives outside `m`; `m` is read only.
double sgd_step_detached(std::span<double> source, const EmbeddingMatrix& m,
                         Order order, VertexId target,
                         std::span<const VertexId> negatives, double rho);

}  // namespace line

#endif  // LINE_MODEL_H_
