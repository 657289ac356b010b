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

#ifndef LINE_TESTS_SUPPORT_FIXTURES_H_
#define LINE_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "line/embedding.h"
#include "line/graph.h"

namespace line::testing {

struct PlantedGraph {
  Graph graph;
  std::vector<int> block;  // per vertex
};

// Undirected stochastic block model. Vertices are named "v<id>" and
// inserted in id order so names and ids agree. `weight` draws the weight of
// each accepted edge (unit weights when empty). Isolated vertices are joined
// to one random same-block vertex so every vertex has a row.
PlantedGraph make_sbm(const std::vector<std::size_t>& block_sizes,
                      double p_in, double p_out, std::uint64_t seed,
                      const std::function<double(std::mt19937_64&)>& weight =
                          {});

// Two 50-vertex blocks with weak topology (p_in 0.22, p_out 0.18) whose
// weights carry the blocks: intra-block weights log-uniform on [1, 1e4],
// cross-block weights log-uniform on [1, 1e2].
PlantedGraph make_weighted_sbm(std::uint64_t seed);

// Graph built from an explicit undirected edge list over `n` vertices v0..
Graph make_undirected(std::size_t n,
                      const std::vector<std::tuple<int, int, double>>& edges);

// Mean cosine over same-block pairs minus mean cosine over cross-block pairs.
double block_cosine_gap(const EmbeddingMatrix& m, const std::vector<int>& block);

// Lloyd's k-means with k-means++ seeding and restarts; returns assignments.
std::vector<int> kmeans(const EmbeddingMatrix& m, int k, std::uint64_t seed,
                        int restarts = 10);

// Agreement of `predicted` with `truth` under the best label permutation.
double clustering_accuracy(const std::vector<int>& predicted,
                           const std::vector<int>& truth, int k);

// 2-means on the normalized embedding, scored against the blocks.
double two_means_accuracy(const EmbeddingMatrix& m,
                          const std::vector<int>& block, std::uint64_t seed);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace line::testing

#endif  // LINE_TESTS_SUPPORT_FIXTURES_H_
