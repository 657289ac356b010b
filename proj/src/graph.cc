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

#include "line/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "line/errors.h"

namespace line {
namespace {

bool arc_less(const Arc& a, const Arc& b) {
  return a.source != b.source ? a.source < b.source : a.target < b.target;
}

bool is_symmetric(const Graph& g) {
  for (const Arc& arc : g.arcs()) {
    if (g.arc_weight(arc.target, arc.source) != arc.weight) return false;
  }
  return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_names, std::vector<Arc> arcs,
             Directedness directedness)
    : vertex_names_(std::move(vertex_names)), directedness_(directedness) {
  if (arcs.empty()) throw DomainError("graph has no edges");
  const std::size_t n = vertex_names_.size();
  if (n > std::numeric_limits<VertexId>::max()) {
    throw DomainError("too many vertices");
  }
  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(vertex_names_[v], static_cast<VertexId>(v)).second) {
      throw DomainError("duplicate vertex name '" + vertex_names_[v] + "'");
    }
  }
  for (const Arc& arc : arcs) {
    if (arc.source >= n || arc.target >= n) {
      throw DomainError("arc endpoint out of range");
    }
    if (arc.source == arc.target) {
      throw DomainError("self-loop on vertex '" + vertex_names_[arc.source] +
                        "'");
    }
    if (!(arc.weight > 0.0) || !std::isfinite(arc.weight)) {
      throw DomainError("edge weight must be positive and finite");
    }
  }

  std::stable_sort(arcs.begin(), arcs.end(), arc_less);
  arcs_.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    if (!arcs_.empty() && arcs_.back().source == arc.source &&
        arcs_.back().target == arc.target) {
      arcs_.back().weight += arc.weight;
    } else {
      arcs_.push_back(arc);
    }
  }
  arcs_.shrink_to_fit();

  offsets_.assign(n + 1, 0);
  out_degree_.assign(n, 0.0);
  for (const Arc& arc : arcs_) {
    ++offsets_[arc.source + 1];
    out_degree_[arc.source] += arc.weight;
    total_weight_ += arc.weight;
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

  if (undirected() && !is_symmetric(*this)) {
    throw DomainError("undirected graph has an asymmetric arc set");
  }
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Graph::arc_weight(VertexId source, VertexId target) const {
  auto range = out_arcs(source);
  auto it = std::lower_bound(
      range.begin(), range.end(), target,
      [](const Arc& arc, VertexId t) { return arc.target < t; });
  return (it != range.end() && it->target == target) ? it->weight : 0.0;
}

Graph load_edge_list(std::istream& in, Directedness directedness) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Arc> arcs;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        ids.emplace(std::string(token), static_cast<VertexId>(names.size()));
    if (inserted) names.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 3) {
      throw ParseError("expected '<src> <dst> <weight>', got " +
                           std::to_string(fields.size()) + " fields",
                       line_number);
    }
    double weight = 0.0;
    const char* first = fields[2].data();
    const char* last = first + fields[2].size();
    auto [ptr, ec] = std::from_chars(first, last, weight);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("cannot parse weight '" + std::string(fields[2]) + "'",
                       line_number);
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw DomainError("line " + std::to_string(line_number) +
                        ": edge weight must be positive and finite");
    }
    if (fields[0] == fields[1]) {
      throw DomainError("line " + std::to_string(line_number) +
                        ": self-loop on '" + std::string(fields[0]) + "'");
    }
    VertexId src = intern(fields[0]);
    VertexId dst = intern(fields[1]);
    arcs.push_back({src, dst, weight});
    if (directedness == Directedness::kUndirected) {
      arcs.push_back({dst, src, weight});
    }
  }
  if (in.bad()) throw ParseError("read failure", line_number);
  if (arcs.empty()) throw DomainError("edge list is empty");
  return Graph(std::move(names), std::move(arcs), directedness);
}

Graph load_edge_list_file(const std::filesystem::path& path,
                          Directedness directedness) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  try {
    return load_edge_list(in, directedness);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

void save_edge_list(const Graph& g, std::ostream& out) {
  char buf[32];
  for (const Arc& arc : g.arcs()) {
    if (g.undirected() && arc.source > arc.target) continue;
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), arc.weight);
    out << g.vertex_name(arc.source) << ' ' << g.vertex_name(arc.target)
        << ' ' << std::string_view(buf, ptr - buf) << '\n';
  }
}

Graph reconstruct(const Graph& g, std::size_t degree_threshold,
                  std::size_t max_expanded_neighbors) {
  if (max_expanded_neighbors < 1) {
    throw UsageError("max_expanded_neighbors must be at least 1");
  }
  const std::size_t n = g.num_vertices();
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());

  std::vector<double> score(n, 0.0);
  std::vector<char> touched(n, 0);
  std::vector<char> is_neighbor(n, 0);
  std::vector<VertexId> candidates;

  for (VertexId i = 0; i < n; ++i) {
    const std::size_t count = g.neighbor_count(i);
    if (count >= degree_threshold || count == 0) continue;

    for (const Arc& ik : g.out_arcs(i)) is_neighbor[ik.target] = 1;
    candidates.clear();
    for (const Arc& ik : g.out_arcs(i)) {
      const double d_k = g.out_degree(ik.target);
      for (const Arc& kj : g.out_arcs(ik.target)) {
        const VertexId j = kj.target;
        if (j == i || is_neighbor[j]) continue;
        if (!touched[j]) {
          touched[j] = 1;
          candidates.push_back(j);
        }
        score[j] += ik.weight * (kj.weight / d_k);
      }
    }

    auto heavier = [&](VertexId a, VertexId b) {
      return score[a] != score[b] ? score[a] > score[b] : a < b;
    };
    const std::size_t keep = std::min(candidates.size(), max_expanded_neighbors);
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(), heavier);
    for (std::size_t c = 0; c < keep; ++c) {
      arcs.push_back({i, candidates[c], score[candidates[c]]});
    }

    for (VertexId j : candidates) {
      score[j] = 0.0;
      touched[j] = 0;
    }
    for (const Arc& ik : g.out_arcs(i)) is_neighbor[ik.target] = 0;
  }

  if (g.undirected()) {
    Graph expanded(g.vertex_names(), arcs, Directedness::kDirected);
    if (is_symmetric(expanded)) {
      return Graph(g.vertex_names(), std::move(arcs),
                   Directedness::kUndirected);
    }
    return expanded;
  }
  return Graph(g.vertex_names(), std::move(arcs), Directedness::kDirected);
}

GraphStats graph_stats(const Graph& g) {
  GraphStats stats;
  stats.num_vertices = g.num_vertices();
  stats.num_edges = g.undirected() ? g.num_arcs() / 2 : g.num_arcs();
  stats.average_degree =
      static_cast<double>(g.num_arcs()) / static_cast<double>(g.num_vertices());
  return stats;
}

}  // namespace line
