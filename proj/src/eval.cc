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

#include "line/eval.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <string_view>
#include <unordered_map>

#include "line/errors.h"
#include "line/rng.h"

namespace line {
namespace {

bool closer(const Neighbor& a, const Neighbor& b) {
  return a.cosine != b.cosine ? a.cosine > b.cosine : a.id < b.id;
}

std::vector<Neighbor> rank_by_cosine(const EmbeddingMatrix& m,
                                     std::span<const double> query,
                                     std::span<const VertexId> excluded,
                                     std::size_t k) {
  const double query_norm = norm(query);
  std::vector<Neighbor> all;
  all.reserve(m.num_vertices());
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) {
      continue;
    }
    auto row = m.vertex(v);
    const double denom = query_norm * norm(row);
    all.push_back({v, denom > 0.0 ? dot(query, row) / denom : 0.0});
  }
  k = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + k, all.end(), closer);
  all.resize(k);
  return all;
}

void check_vertex(const EmbeddingMatrix& m, VertexId v) {
  if (v >= m.num_vertices()) {
    throw UsageError("unknown vertex id " + std::to_string(v));
  }
}

double f1(std::size_t tp, std::size_t fp, std::size_t fn) {
  const std::size_t denom = 2 * tp + fp + fn;
  return denom == 0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
}

// Full-batch gradient descent on the mean logistic loss plus
// (l2 / 2n) ||w||^2; the bias is not regularized.
struct BinaryModel {
  std::vector<double> w;
  double b = 0.0;
};

BinaryModel fit_logistic(const std::vector<double>& x, std::size_t dim,
                         const std::vector<double>& y,
                         const ClassifierOptions& options) {
  const std::size_t n = y.size();
  BinaryModel model{std::vector<double>(dim, 0.0), 0.0};
  std::vector<double> grad(dim);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (int iter = 0; iter < options.iterations; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = x.data() + i * dim;
      double z = model.b;
      for (std::size_t c = 0; c < dim; ++c) z += model.w[c] * row[c];
      const double residual = 1.0 / (1.0 + std::exp(-z)) - y[i];
      for (std::size_t c = 0; c < dim; ++c) grad[c] += residual * row[c];
      grad_b += residual;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      model.w[c] -= options.step * inv_n * (grad[c] + options.l2 * model.w[c]);
    }
    model.b -= options.step * inv_n * grad_b;
  }
  return model;
}

}  // namespace

std::vector<Neighbor> top_k_similar(const EmbeddingMatrix& m, VertexId query,
                                    std::size_t k) {
  check_vertex(m, query);
  if (k >= m.num_vertices()) {
    throw UsageError("k must be smaller than the number of vertices");
  }
  const VertexId excluded[] = {query};
  return rank_by_cosine(m, m.vertex(query), excluded, k);
}

std::vector<Neighbor> analogy(const EmbeddingMatrix& m, VertexId a, VertexId b,
                              VertexId c, std::size_t k) {
  check_vertex(m, a);
  check_vertex(m, b);
  check_vertex(m, c);
  std::vector<double> target(m.dim());
  auto ua = m.vertex(a), ub = m.vertex(b), uc = m.vertex(c);
  for (std::size_t i = 0; i < m.dim(); ++i) target[i] = ub[i] - ua[i] + uc[i];
  const VertexId excluded[] = {a, b, c};
  return rank_by_cosine(m, target, excluded, k);
}

LabeledSet load_labels(std::istream& in,
                       const std::vector<std::string>& vertex_names) {
  std::unordered_map<std::string_view, VertexId> vertex_ids;
  for (VertexId v = 0; v < vertex_names.size(); ++v) {
    vertex_ids.emplace(vertex_names[v], v);
  }
  LabeledSet set;
  set.labels.resize(vertex_names.size());
  std::map<std::string, std::uint32_t> label_ids;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t name_end = line.find_first_of(" \t", start);
    if (name_end == std::string::npos) {
      throw ParseError("expected '<vertex> <label>[,<label>...]'", line_number);
    }
    const std::size_t labels_start = line.find_first_not_of(" \t", name_end);
    const std::size_t labels_end = line.find_last_not_of(" \t");
    if (labels_start == std::string::npos) {
      throw ParseError("vertex has no labels", line_number);
    }
    std::string_view name(line.data() + start, name_end - start);
    std::string_view list(line.data() + labels_start,
                          labels_end + 1 - labels_start);
    if (list.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("labels must be comma separated", line_number);
    }
    auto it = vertex_ids.find(name);
    if (it == vertex_ids.end()) {
      throw ParseError("unknown vertex '" + std::string(name) + "'",
                       line_number);
    }
    auto& assigned = set.labels[it->second];
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string_view::npos) comma = list.size();
      std::string label(list.substr(pos, comma - pos));
      if (label.empty()) throw ParseError("empty label", line_number);
      auto [entry, inserted] = label_ids.emplace(
          label, static_cast<std::uint32_t>(set.label_names.size()));
      if (inserted) set.label_names.push_back(label);
      assigned.push_back(entry->second);
      pos = comma + 1;
    }
  }
  for (auto& assigned : set.labels) {
    std::sort(assigned.begin(), assigned.end());
    assigned.erase(std::unique(assigned.begin(), assigned.end()),
                   assigned.end());
  }
  if (set.num_labels() < 2) {
    throw DomainError("classification needs at least two distinct labels");
  }
  return set;
}

F1Scores f1_scores(std::span<const LabelCounts> per_label) {
  std::size_t tp = 0, fp = 0, fn = 0;
  double macro_sum = 0.0;
  std::size_t macro_count = 0;
  for (const LabelCounts& c : per_label) {
    tp += c.true_positive;
    fp += c.false_positive;
    fn += c.false_negative;
    if (c.true_positive + c.false_positive + c.false_negative > 0) {
      macro_sum += f1(c.true_positive, c.false_positive, c.false_negative);
      ++macro_count;
    }
  }
  F1Scores scores;
  scores.micro = f1(tp, fp, fn);
  scores.macro = macro_count == 0 ? 0.0 : macro_sum / macro_count;
  return scores;
}

SplitResult classify_split(const EmbeddingMatrix& m, const LabeledSet& labels,
                           std::span<const VertexId> train_ids,
                           std::span<const VertexId> test_ids,
                           const ClassifierOptions& options) {
  if (labels.labels.size() != m.num_vertices()) {
    throw UsageError("label set does not match the embedding rows");
  }
  if (train_ids.empty() || test_ids.empty()) {
    throw UsageError("train and test splits must be non-empty");
  }
  const std::size_t dim = m.dim();
  const std::size_t num_labels = labels.num_labels();

  std::vector<double> mean(dim, 0.0), scale(dim, 0.0);
  for (VertexId v : train_ids) {
    auto row = m.vertex(v);
    for (std::size_t c = 0; c < dim; ++c) mean[c] += row[c];
  }
  for (double& x : mean) x /= static_cast<double>(train_ids.size());
  for (VertexId v : train_ids) {
    auto row = m.vertex(v);
    for (std::size_t c = 0; c < dim; ++c) {
      scale[c] += (row[c] - mean[c]) * (row[c] - mean[c]);
    }
  }
  for (double& x : scale) {
    x = std::sqrt(x / static_cast<double>(train_ids.size()));
    if (x == 0.0) x = 1.0;
  }
  auto standardized = [&](std::span<const VertexId> ids) {
    std::vector<double> x(ids.size() * dim);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto row = m.vertex(ids[i]);
      for (std::size_t c = 0; c < dim; ++c) {
        x[i * dim + c] = (row[c] - mean[c]) / scale[c];
      }
    }
    return x;
  };
  const std::vector<double> x_train = standardized(train_ids);
  const std::vector<double> x_test = standardized(test_ids);

  SplitResult result;
  std::vector<double> scores(test_ids.size() * num_labels,
                             -std::numeric_limits<double>::infinity());
  std::vector<double> y(train_ids.size());
  for (std::uint32_t label = 0; label < num_labels; ++label) {
    bool any_positive = false;
    for (std::size_t i = 0; i < train_ids.size(); ++i) {
      const auto& own = labels.labels[train_ids[i]];
      y[i] = std::binary_search(own.begin(), own.end(), label) ? 1.0 : 0.0;
      any_positive = any_positive || y[i] > 0.0;
    }
    if (!any_positive) {
      ++result.degenerate_labels;
      continue;
    }
    const BinaryModel model = fit_logistic(x_train, dim, y, options);
    for (std::size_t i = 0; i < test_ids.size(); ++i) {
      double z = model.b;
      for (std::size_t c = 0; c < dim; ++c) {
        z += model.w[c] * x_test[i * dim + c];
      }
      scores[i * num_labels + label] = z;
    }
  }

  result.counts.assign(num_labels, {});
  std::vector<std::uint32_t> order(num_labels);
  for (std::size_t i = 0; i < test_ids.size(); ++i) {
    const auto& truth = labels.labels[test_ids[i]];
    const double* row = scores.data() + i * num_labels;
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return row[a] > row[b];
    });
    std::vector<std::uint32_t> predicted;
    for (std::uint32_t label : order) {
      if (predicted.size() == truth.size()) break;
      if (std::isinf(row[label])) break;
      predicted.push_back(label);
    }
    for (std::uint32_t label : predicted) {
      if (std::binary_search(truth.begin(), truth.end(), label)) {
        ++result.counts[label].true_positive;
      } else {
        ++result.counts[label].false_positive;
      }
    }
    for (std::uint32_t label : truth) {
      if (std::find(predicted.begin(), predicted.end(), label) ==
          predicted.end()) {
        ++result.counts[label].false_negative;
      }
    }
  }
  result.scores = f1_scores(result.counts);
  return result;
}

EvalReport classify(const EmbeddingMatrix& m, const LabeledSet& labels,
                    double train_fraction, std::size_t runs,
                    std::uint64_t seed, const ClassifierOptions& options) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw UsageError("train fraction must lie strictly between 0 and 1");
  }
  if (runs < 1) throw UsageError("runs must be at least 1");
  if (labels.labels.size() != m.num_vertices()) {
    throw UsageError("label set does not match the embedding rows");
  }

  // Strata keyed by each vertex's smallest label.
  std::map<std::uint32_t, std::vector<VertexId>> strata;
  for (VertexId v = 0; v < labels.labels.size(); ++v) {
    if (!labels.labels[v].empty()) strata[labels.labels[v].front()].push_back(v);
  }

  EvalReport report;
  Rng rng(seed);
  for (std::size_t run = 0; run < runs; ++run) {
    std::vector<VertexId> train_ids, test_ids;
    for (auto& [label, members] : strata) {
      std::shuffle(members.begin(), members.end(), rng.engine());
      const auto take = static_cast<std::size_t>(
          std::llround(train_fraction * static_cast<double>(members.size())));
      train_ids.insert(train_ids.end(), members.begin(), members.begin() + take);
      test_ids.insert(test_ids.end(), members.begin() + take, members.end());
    }
    if (train_ids.empty() || test_ids.empty()) {
      throw UsageError("train fraction leaves an empty split");
    }
    std::sort(train_ids.begin(), train_ids.end());
    std::sort(test_ids.begin(), test_ids.end());
    SplitResult split =
        classify_split(m, labels, train_ids, test_ids, options);
    report.runs.push_back(split.scores);
    report.degenerate_labels += split.degenerate_labels;
    report.micro_f1 += split.scores.micro;
    report.macro_f1 += split.scores.macro;
  }
  report.micro_f1 /= static_cast<double>(runs);
  report.macro_f1 /= static_cast<double>(runs);
  return report;
}

}  // namespace line
