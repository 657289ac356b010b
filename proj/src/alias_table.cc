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

#include "line/alias_table.h"

#include <cmath>
#include <limits>

#include "line/errors.h"

namespace line {
namespace {

constexpr std::uint32_t kAlwaysKeep = std::numeric_limits<std::uint32_t>::max();

std::uint32_t threshold(double prob) {
  const double scaled = std::round(prob * 0x1.0p32);
  return scaled >= 0x1.0p32 ? kAlwaysKeep : static_cast<std::uint32_t>(scaled);
}

std::vector<double> noise_weights(std::span<const double> out_degrees,
                                  std::vector<VertexId>& support) {
  std::vector<double> weights;
  for (std::size_t v = 0; v < out_degrees.size(); ++v) {
    if (out_degrees[v] > 0.0) {
      support.push_back(static_cast<VertexId>(v));
      weights.push_back(std::pow(out_degrees[v], 0.75));
    }
  }
  if (weights.empty()) {
    throw DomainError("noise distribution needs a vertex with positive degree");
  }
  return weights;
}

}  // namespace

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw DomainError("alias table needs at least one weight");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("alias table too large");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("alias table weights must be positive and finite");
    }
    sum += w;
  }

  slots_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / sum;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t less = small.back();
    small.pop_back();
    std::uint32_t more = large.back();
    slots_[less] = {threshold(scaled[less]), more};
    scaled[more] = (scaled[more] + scaled[less]) - 1.0;
    if (scaled[more] < 1.0) {
      large.pop_back();
      small.push_back(more);
    }
  }
  // Leftovers differ from 1 only by rounding drift.
  for (std::uint32_t i : large) slots_[i] = {kAlwaysKeep, i};
  for (std::uint32_t i : small) slots_[i] = {kAlwaysKeep, i};
}

std::vector<double> AliasTable::reconstructed_probabilities() const {
  const std::size_t n = slots_.size();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // A self-aliased slot always yields i, whatever its threshold.
    const double keep = slots_[i].alias == i ? 1.0 : prob(i);
    p[i] += keep;
    p[slots_[i].alias] += 1.0 - keep;
  }
  for (double& x : p) x /= static_cast<double>(n);
  return p;
}

NoiseDistribution::NoiseDistribution(std::span<const double> out_degrees)
    : table_(noise_weights(out_degrees, support_)),
      num_vertices_(out_degrees.size()) {}

std::vector<double> NoiseDistribution::probabilities() const {
  std::vector<double> p(num_vertices_, 0.0);
  auto support_p = table_.reconstructed_probabilities();
  for (std::size_t s = 0; s < support_.size(); ++s) {
    p[support_[s]] = support_p[s];
  }
  return p;
}

EdgeSampler EdgeSampler::weighted(const Graph& g) {
  std::vector<double> weights;
  weights.reserve(g.num_arcs());
  for (const Arc& arc : g.arcs()) weights.push_back(arc.weight);
  return EdgeSampler(AliasTable(weights));
}

EdgeSampler EdgeSampler::uniform(const Graph& g) {
  std::vector<double> weights(g.num_arcs(), 1.0);
  return EdgeSampler(AliasTable(weights));
}

}  // namespace line
