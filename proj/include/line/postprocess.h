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

#ifndef LINE_POSTPROCESS_H_
#define LINE_POSTPROCESS_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "line/embedding.h"
#include "line/graph.h"
#include "line/model.h"

namespace line {

struct NormalizeResult {
  EmbeddingMatrix matrix;
  // Rows that were exactly zero and were left as zero.
  std::size_t zero_rows = 0;
};

// Scales every vertex row to unit L2 norm. Context rows are copied as is.
NormalizeResult normalize(const EmbeddingMatrix& m);

// Row-wise [normalize(a) | normalize(b)]; the result has no contexts.
// Throws UsageError when the row counts differ.
EmbeddingMatrix concatenate(const EmbeddingMatrix& a, const EmbeddingMatrix& b);

struct NewEdge {
  VertexId neighbor;
  double weight;
};

// Embeds a vertex that is not part of `g` from its edges to existing
// vertices. Only the new vector is optimized; every row of `m` is left
// bit-identical. Uses cfg.order, cfg.negatives, cfg.rho0, cfg.total_samples
// and cfg.seed; the neighbor is drawn proportionally to edge weight and the
// negatives from the noise distribution of `g`.
// Throws UnsupportedError for an empty edge list.
std::vector<double> infer_new_vertex(const Graph& g, const EmbeddingMatrix& m,
                                     const std::vector<NewEdge>& new_edges,
                                     const TrainConfig& cfg);

}  // namespace line

#endif  // LINE_POSTPROCESS_H_
