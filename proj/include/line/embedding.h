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

#ifndef LINE_EMBEDDING_H_
#define LINE_EMBEDDING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "line/graph.h"

namespace line {

// Row-major |V| x d vertex vectors u_i plus, for second-order models, the
// context vectors u'_i. Rows may be read and written concurrently without
// synchronization during training; anything that needs a consistent view
// (objectives, serialization) must run after the writers have joined.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  // Zero-filled. Throws UsageError if dim or num_vertices is 0.
  EmbeddingMatrix(std::size_t num_vertices, std::size_t dim, bool with_context);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t dim() const { return dim_; }
  bool has_context() const { return !context_.empty(); }

  std::span<double> vertex(VertexId v) {
    return {vertex_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }
  std::span<const double> vertex(VertexId v) const {
    return {vertex_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }
  std::span<double> context(VertexId v) {
    return {context_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }
  std::span<const double> context(VertexId v) const {
    return {context_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }

  std::span<double> vertex_data() { return vertex_; }
  std::span<const double> vertex_data() const { return vertex_; }
  std::span<double> context_data() { return context_; }
  std::span<const double> context_data() const { return context_; }

  // Drops the context vectors, keeping u_i only.
  void drop_context();

  bool all_finite() const;

  bool operator==(const EmbeddingMatrix&) const = default;

 private:
  std::size_t num_vertices_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> vertex_;
  std::vector<double> context_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
// Cosine of two rows; 0 when either is the zero vector.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace line

#endif  // LINE_EMBEDDING_H_
