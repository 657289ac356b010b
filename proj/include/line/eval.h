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

#ifndef LINE_EVAL_H_
#define LINE_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "line/embedding.h"
#include "line/graph.h"

namespace line {

struct Neighbor {
  VertexId id;
  double cosine;

  bool operator==(const Neighbor&) const = default;
};

// The k rows most cosine-similar to `query`, descending, query excluded,
// ties to the smaller id. Throws UsageError for an unknown query or
// k >= |V|.
std::vector<Neighbor> top_k_similar(const EmbeddingMatrix& m, VertexId query,
                                    std::size_t k);

// Candidates closest in cosine to u_b - u_a + u_c, excluding a, b and c.
std::vector<Neighbor> analogy(const EmbeddingMatrix& m, VertexId a, VertexId b,
                              VertexId c, std::size_t k);

// Multi-label assignment for vertex ids. labels[v] is sorted and empty for
// unlabeled vertices.
struct LabeledSet {
  std::vector<std::vector<std::uint32_t>> labels;
  std::vector<std::string> label_names;

  std::size_t num_labels() const { return label_names.size(); }
};

// Reads `<vertex-name> <label>[,<label>...]` lines against the vertex
// order in `vertex_names`. Repeated vertices merge their labels.
LabeledSet load_labels(std::istream& in,
                       const std::vector<std::string>& vertex_names);

struct LabelCounts {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
};

struct F1Scores {
  // From pooled counts over every label.
  double micro = 0.0;
  // Unweighted mean over labels that were present or predicted.
  double macro = 0.0;
};

F1Scores f1_scores(std::span<const LabelCounts> per_label);

struct ClassifierOptions {
  double l2 = 1.0;
  int iterations = 500;
  double step = 0.1;
};

struct SplitResult {
  F1Scores scores;
  std::vector<LabelCounts> counts;
  // Labels with no positive training vertex; they are never predicted.
  std::size_t degenerate_labels = 0;
};

// One-vs-rest logistic regression trained on `train_ids` and scored on
// `test_ids`. A test vertex with n true labels is assigned its n
// highest-scoring labels.
SplitResult classify_split(const EmbeddingMatrix& m, const LabeledSet& labels,
                           std::span<const VertexId> train_ids,
                           std::span<const VertexId> test_ids,
                           const ClassifierOptions& options = {});

struct EvalReport {
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  std::vector<F1Scores> runs;
  std::size_t degenerate_labels = 0;  // summed over runs
};

// Averages classify_split over `runs` stratified random splits.
EvalReport classify(const EmbeddingMatrix& m, const LabeledSet& labels,
                    double train_fraction, std::size_t runs,
                    std::uint64_t seed, const ClassifierOptions& options = {});

}  // namespace line

#endif  // LINE_EVAL_H_
