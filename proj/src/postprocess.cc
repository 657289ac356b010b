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

#include "line/postprocess.h"

#include <algorithm>
#include <cmath>

#include "line/alias_table.h"
#include "line/errors.h"
#include "line/rng.h"
#include "line/trainer.h"

namespace line {

NormalizeResult normalize(const EmbeddingMatrix& m) {
  NormalizeResult result{m, 0};
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    auto row = result.matrix.vertex(v);
    const double length = norm(row);
    if (length == 0.0) {
      ++result.zero_rows;
      continue;
    }
    for (double& x : row) x /= length;
  }
  return result;
}

EmbeddingMatrix concatenate(const EmbeddingMatrix& a,
                            const EmbeddingMatrix& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw UsageError("cannot concatenate embeddings with " +
                     std::to_string(a.num_vertices()) + " and " +
                     std::to_string(b.num_vertices()) + " rows");
  }
  const EmbeddingMatrix left = normalize(a).matrix;
  const EmbeddingMatrix right = normalize(b).matrix;
  EmbeddingMatrix out(a.num_vertices(), a.dim() + b.dim(), false);
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto row = out.vertex(v);
    std::copy_n(left.vertex(v).begin(), a.dim(), row.begin());
    std::copy_n(right.vertex(v).begin(), b.dim(), row.begin() + a.dim());
  }
  return out;
}

std::vector<double> infer_new_vertex(const Graph& g, const EmbeddingMatrix& m,
                                     const std::vector<NewEdge>& new_edges,
                                     const TrainConfig& cfg) {
  if (new_edges.empty()) {
    throw UnsupportedError(
        "a new vertex without edges to existing vertices cannot be embedded");
  }
  cfg.validate();
  if (m.num_vertices() != g.num_vertices()) {
    throw UsageError("embedding rows do not match the graph");
  }
  if (cfg.dim != m.dim()) {
    throw UsageError("config dimension does not match the embedding");
  }
  if (cfg.order == Order::kSecond && !m.has_context()) {
    throw UsageError("second-order inference needs context vectors");
  }
  std::vector<double> weights;
  weights.reserve(new_edges.size());
  for (const NewEdge& edge : new_edges) {
    if (edge.neighbor >= g.num_vertices()) {
      throw UsageError("new edge points to an unknown vertex");
    }
    weights.push_back(edge.weight);
  }
  const AliasTable neighbors(weights);
  const NoiseDistribution noise(g);

  Rng rng(cfg.seed);
  std::vector<double> vec(m.dim());
  const double scale = 1.0 / static_cast<double>(m.dim());
  for (double& x : vec) x = (rng.uniform() - 0.5) * scale;

  std::vector<VertexId> draws(static_cast<std::size_t>(cfg.negatives));
  for (std::uint64_t t = 0; t < cfg.total_samples; ++t) {
    const double rho = learning_rate(cfg.rho0, t, cfg.total_samples);
    const VertexId target = new_edges[neighbors.draw(rng)].neighbor;
    for (VertexId& n : draws) n = noise.draw(rng);
    sgd_step_detached(vec, m, cfg.order, target, draws, rho);
  }
  return vec;
}

}  // namespace line
