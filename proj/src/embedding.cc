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

#include "line/embedding.h"

#include <algorithm>
#include <cmath>

#include "line/errors.h"

namespace line {

EmbeddingMatrix::EmbeddingMatrix(std::size_t num_vertices, std::size_t dim,
                                 bool with_context)
    : num_vertices_(num_vertices), dim_(dim) {
  if (dim == 0) throw UsageError("embedding dimension must be at least 1");
  if (num_vertices == 0) throw UsageError("embedding needs at least one row");
  vertex_.assign(num_vertices * dim, 0.0);
  if (with_context) context_.assign(num_vertices * dim, 0.0);
}

void EmbeddingMatrix::drop_context() {
  context_.clear();
  context_.shrink_to_fit();
}

bool EmbeddingMatrix::all_finite() const {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(vertex_.begin(), vertex_.end(), finite) &&
         std::all_of(context_.begin(), context_.end(), finite);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) sum += a[c] * b[c];
  return sum;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine(std::span<const double> a, std::span<const double> b) {
  const double denom = norm(a) * norm(b);
  return denom > 0.0 ? dot(a, b) / denom : 0.0;
}

}  // namespace line
