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

#ifndef LINE_ALIAS_TABLE_H_
#define LINE_ALIAS_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "line/graph.h"
#include "line/rng.h"

namespace line {

// Walker/Vose alias table: O(n) construction, O(1) draws from a fixed
// discrete distribution. Immutable; draw() is safe from many threads as long
// as each brings its own Rng.
class AliasTable {
 public:
  // Throws DomainError on an empty vector or any weight that is not
  // positive and finite.
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return slots_.size(); }
  // Chance of keeping column i rather than its alias, in steps of 2^-32.
  double prob(std::size_t i) const {
    return static_cast<double>(slots_[i].threshold) * 0x1.0p-32;
  }
  std::size_t alias(std::size_t i) const { return slots_[i].alias; }

  // Probability of drawing i, recovered from the table itself.
  std::vector<double> reconstructed_probabilities() const;

  // One 64-bit word: the high half of word * n picks the column and the
  // low half is the coin between the column and its alias.
  std::size_t draw(Rng& rng) const {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(rng.bits()) * slots_.size();
    const auto column = static_cast<std::size_t>(product >> 64);
    const auto coin = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(product) >> 32);
    const Slot& slot = slots_[column];
    return coin < slot.threshold ? column : slot.alias;
  }

 private:
  // 8 bytes per slot so large tables stay cache and TLB friendly.
  struct Slot {
    std::uint32_t threshold;
    std::uint32_t alias;
  };
  std::vector<Slot> slots_;
};

// Noise distribution P_n(v) proportional to d_v^{3/4} over vertices with
// positive out-degree. Zero-degree vertices are outside the support.
class NoiseDistribution {
 public:
  // Throws DomainError if every out-degree is zero.
  explicit NoiseDistribution(std::span<const double> out_degrees);
  explicit NoiseDistribution(const Graph& g)
      : NoiseDistribution(g.out_degrees()) {}

  VertexId draw(Rng& rng) const { return support_[table_.draw(rng)]; }

  // Normalized probability of every vertex id (0 outside the support).
  std::vector<double> probabilities() const;
  std::size_t num_vertices() const { return num_vertices_; }

 private:
  std::vector<VertexId> support_;
  AliasTable table_;
  std::size_t num_vertices_;
};

// Draws arc indices of a graph, either proportionally to arc weight or
// uniformly.
class EdgeSampler {
 public:
  static EdgeSampler weighted(const Graph& g);
  static EdgeSampler uniform(const Graph& g);

  std::size_t draw(Rng& rng) const { return table_.draw(rng); }
  std::size_t size() const { return table_.size(); }

 private:
  explicit EdgeSampler(AliasTable table) : table_(std::move(table)) {}
  AliasTable table_;
};

}  // namespace line

#endif  // LINE_ALIAS_TABLE_H_
