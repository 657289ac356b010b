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

#ifndef LINE_GRAPH_H_
#define LINE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace line {

using VertexId = std::uint32_t;

enum class Directedness { kDirected, kUndirected };

struct Arc {
  VertexId source;
  VertexId target;
  double weight;

  bool operator==(const Arc&) const = default;
};

// Weighted information network stored as directed arcs sorted by
// (source, target). An undirected edge is two arcs of equal weight.
// Immutable after construction and safe to share between threads.
class Graph {
 public:
  // Validates and indexes `arcs`. Duplicate (source, target) pairs are
  // merged by summing their weights. Throws DomainError on self-loops,
  // non-positive or non-finite weights, out-of-range ids, an empty arc set,
  // or an asymmetric arc set declared undirected.
  Graph(std::vector<std::string> vertex_names, std::vector<Arc> arcs,
        Directedness directedness);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  Directedness directedness() const { return directedness_; }
  bool undirected() const { return directedness_ == Directedness::kUndirected; }

  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Arc> out_arcs(VertexId v) const {
    return std::span<const Arc>(arcs_).subspan(
        offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  // Number of distinct out-neighbors.
  std::size_t neighbor_count(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  // Weighted out-degree d_v.
  double out_degree(VertexId v) const { return out_degree_[v]; }
  std::span<const double> out_degrees() const { return out_degree_; }
  double total_weight() const { return total_weight_; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  // Weight of arc (source, target), or 0 if absent. O(log deg).
  double arc_weight(VertexId source, VertexId target) const;

 private:
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
  std::vector<double> out_degree_;
  double total_weight_ = 0.0;
  Directedness directedness_;
};

// Reads `<src> <dst> <weight>` lines. Blank lines and lines starting with '#'
// are skipped. Vertex ids follow first appearance. Undirected input lines
// become two arcs.
Graph load_edge_list(std::istream& in, Directedness directedness);
Graph load_edge_list_file(const std::filesystem::path& path,
                          Directedness directedness);

// Inverse of load_edge_list: undirected graphs emit each edge once.
void save_edge_list(const Graph& g, std::ostream& out);

// Adds second-order neighbors to every vertex with fewer than
// `degree_threshold` distinct out-neighbors. The new arc (i, j) carries
// sum_k w_ik * (w_kj / d_k) over k in N(i); only the
// `max_expanded_neighbors` heaviest new candidates are kept (ties to the
// smaller id). Existing arcs are untouched. The result stays undirected only
// if the input was undirected and the expanded arc set is still symmetric.
Graph reconstruct(const Graph& g, std::size_t degree_threshold,
                  std::size_t max_expanded_neighbors);

struct GraphStats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;  // undirected edges count once
  double average_degree = 0.0;
};

GraphStats graph_stats(const Graph& g);

}  // namespace line

#endif  // LINE_GRAPH_H_
