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

#include "fixtures.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "line/postprocess.h"

namespace line::testing {

PlantedGraph make_sbm(const std::vector<std::size_t>& block_sizes,
                      double p_in, double p_out, std::uint64_t seed,
                      const std::function<double(std::mt19937_64&)>& weight) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<int> block;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    block.insert(block.end(), block_sizes[b], static_cast<int>(b));
  }
  const std::size_t n = block.size();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));

  std::vector<Arc> arcs;
  std::vector<std::size_t> degree(n, 0);
  auto add = [&](std::size_t i, std::size_t j) {
    const double w = weight ? weight(rng) : 1.0;
    arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), w});
    arcs.push_back({static_cast<VertexId>(j), static_cast<VertexId>(i), w});
    ++degree[i];
    ++degree[j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < (block[i] == block[j] ? p_in : p_out)) add(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] > 0) continue;
    std::vector<std::size_t> mates;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && block[j] == block[i]) mates.push_back(j);
    }
    add(i, mates[std::uniform_int_distribution<std::size_t>(
                0, mates.size() - 1)(rng)]);
  }
  return {Graph(std::move(names), std::move(arcs), Directedness::kUndirected),
          std::move(block)};
}

PlantedGraph make_weighted_sbm(std::uint64_t seed) {
  PlantedGraph planted = make_sbm({50, 50}, 0.22, 0.18, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Arc> arcs;
  for (const Arc& a : planted.graph.arcs()) {
    if (a.source > a.target) continue;
    const bool intra = planted.block[a.source] == planted.block[a.target];
    const double top = std::log(intra ? 1e4 : 1e2);
    const double w =
        std::exp(std::uniform_real_distribution<double>(0.0, top)(rng));
    arcs.push_back({a.source, a.target, w});
    arcs.push_back({a.target, a.source, w});
  }
  return {Graph(planted.graph.vertex_names(), std::move(arcs),
                Directedness::kUndirected),
          std::move(planted.block)};
}

Graph make_undirected(std::size_t n,
                      const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  std::vector<Arc> arcs;
  for (auto [i, j, w] : edges) {
    arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), w});
    arcs.push_back({static_cast<VertexId>(j), static_cast<VertexId>(i), w});
  }
  return Graph(std::move(names), std::move(arcs), Directedness::kUndirected);
}

double block_cosine_gap(const EmbeddingMatrix& m,
                        const std::vector<int>& block) {
  double intra = 0.0, inter = 0.0;
  std::size_t n_intra = 0, n_inter = 0;
  for (VertexId i = 0; i < m.num_vertices(); ++i) {
    for (VertexId j = i + 1; j < m.num_vertices(); ++j) {
      const double c = cosine(m.vertex(i), m.vertex(j));
      if (block[i] == block[j]) {
        intra += c;
        ++n_intra;
      } else {
        inter += c;
        ++n_inter;
      }
    }
  }
  return intra / static_cast<double>(n_intra) -
         inter / static_cast<double>(n_inter);
}

std::vector<int> kmeans(const EmbeddingMatrix& m, int k, std::uint64_t seed,
                        int restarts) {
  const std::size_t n = m.num_vertices();
  const std::size_t d = m.dim();
  std::mt19937_64 rng(seed);
  auto dist2 = [&](std::span<const double> a, const double* b) {
    double s = 0.0;
    for (std::size_t c = 0; c < d; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return s;
  };

  std::vector<int> best;
  double best_inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> centers;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    auto first = m.vertex(static_cast<VertexId>(pick(rng)));
    centers.insert(centers.end(), first.begin(), first.end());
    std::vector<double> closest(n);
    for (int c = 1; c < k; ++c) {
      for (std::size_t v = 0; v < n; ++v) {
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < c; ++j) {
          best_d = std::min(best_d, dist2(m.vertex(static_cast<VertexId>(v)),
                                          centers.data() + j * d));
        }
        closest[v] = best_d;
      }
      std::discrete_distribution<std::size_t> next(closest.begin(),
                                                   closest.end());
      auto row = m.vertex(static_cast<VertexId>(next(rng)));
      centers.insert(centers.end(), row.begin(), row.end());
    }

    std::vector<int> assign(n, -1);
    double inertia = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      bool changed = false;
      inertia = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        int arg = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
          const double dj =
              dist2(m.vertex(static_cast<VertexId>(v)), centers.data() + j * d);
          if (dj < best_d) {
            best_d = dj;
            arg = j;
          }
        }
        inertia += best_d;
        if (assign[v] != arg) {
          assign[v] = arg;
          changed = true;
        }
      }
      if (!changed) break;
      std::vector<double> sums(k * d, 0.0);
      std::vector<std::size_t> counts(k, 0);
      for (std::size_t v = 0; v < n; ++v) {
        auto row = m.vertex(static_cast<VertexId>(v));
        for (std::size_t c = 0; c < d; ++c) sums[assign[v] * d + c] += row[c];
        ++counts[assign[v]];
      }
      for (int j = 0; j < k; ++j) {
        if (counts[j] == 0) continue;
        for (std::size_t c = 0; c < d; ++c) {
          centers[j * d + c] = sums[j * d + c] / counts[j];
        }
      }
    }
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best = assign;
    }
  }
  return best;
}

double clustering_accuracy(const std::vector<int>& predicted,
                           const std::vector<int>& truth, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t v = 0; v < truth.size(); ++v) {
      if (perm[predicted[v]] == truth[v]) ++hits;
    }
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

double two_means_accuracy(const EmbeddingMatrix& m,
                          const std::vector<int>& block, std::uint64_t seed) {
  const EmbeddingMatrix unit = normalize(m).matrix;
  return clustering_accuracy(kmeans(unit, 2, seed), block, 2);
}

TempDir::TempDir() {
  static std::mt19937_64 rng(std::random_device{}());
  for (;;) {
    path_ = std::filesystem::temp_directory_path() /
            ("line-test-" + std::to_string(rng()));
    if (std::filesystem::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace line::testing
