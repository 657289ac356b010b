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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "line/embedding_io.h"
#include "line/errors.h"
#include "line/eval.h"
#include "line/graph.h"
#include "line/model.h"
#include "line/postprocess.h"
#include "line/trainer.h"

namespace line::cli {
namespace {

constexpr std::size_t kObjectiveVertexLimit = 1000;

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string format_general(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

Directedness directedness(bool undirected) {
  return undirected ? Directedness::kUndirected : Directedness::kDirected;
}

Order parse_order(int order) {
  if (order != 1 && order != 2) throw UsageError("--order must be 1 or 2");
  return static_cast<Order>(order);
}

VertexId lookup(const std::vector<std::string>& names,
                const std::string& name) {
  for (VertexId v = 0; v < names.size(); ++v) {
    if (names[v] == name) return v;
  }
  throw UsageError("unknown vertex '" + name + "'");
}

// Reorders the rows of `e` to follow `names`. Every name must be present.
EmbeddingMatrix align_rows(const NamedEmbedding& e,
                           const std::vector<std::string>& names,
                           const std::string& what) {
  if (e.names.size() != names.size()) {
    throw UsageError(what + " has " + std::to_string(e.names.size()) +
                     " rows, expected " + std::to_string(names.size()));
  }
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < e.names.size(); ++v) index.emplace(e.names[v], v);
  const std::size_t d = e.matrix.dim();
  EmbeddingMatrix out(names.size(), d, false);
  for (VertexId v = 0; v < names.size(); ++v) {
    auto it = index.find(names[v]);
    if (it == index.end()) {
      throw UsageError(what + " has no row for '" + names[v] + "'");
    }
    auto src = e.matrix.vertex(it->second);
    std::copy(src.begin(), src.end(), out.vertex(v).begin());
  }
  return out;
}

EmbeddingMatrix vertex_rows(const EmbeddingMatrix& m) {
  EmbeddingMatrix out(m.num_vertices(), m.dim(), false);
  std::copy(m.vertex_data().begin(), m.vertex_data().end(),
            out.vertex_data().begin());
  return out;
}

EmbeddingMatrix context_rows(const EmbeddingMatrix& m) {
  EmbeddingMatrix out(m.num_vertices(), m.dim(), false);
  std::copy(m.context_data().begin(), m.context_data().end(),
            out.vertex_data().begin());
  return out;
}

LabeledSet load_labels_file(const std::string& path,
                            const std::vector<std::string>& names) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return load_labels(in, names);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

// `neighbor weight` per line; `#` comments and blank lines skipped.
std::vector<NewEdge> load_new_edges(const std::string& path,
                                    const Graph& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<NewEdge> edges;
  std::string text;
  for (std::size_t line_number = 1; std::getline(in, text); ++line_number) {
    std::istringstream fields(text);
    std::string name, weight_text, extra;
    if (!(fields >> name) || name[0] == '#') continue;
    if (!(fields >> weight_text) || (fields >> extra)) {
      throw ParseError(path + ": expected 'neighbor weight'", line_number);
    }
    std::optional<VertexId> v = g.find_vertex(name);
    if (!v) {
      throw ParseError(path + ": unknown vertex '" + name + "'", line_number);
    }
    std::size_t used = 0;
    double weight = 0.0;
    try {
      weight = std::stod(weight_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != weight_text.size()) {
      throw ParseError(path + ": bad weight '" + weight_text + "'",
                       line_number);
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw DomainError(path + ": line " + std::to_string(line_number) +
                        ": weight must be positive and finite");
    }
    edges.push_back({*v, weight});
  }
  if (edges.empty()) throw UnsupportedError(path + ": no edges for new vertex");
  return edges;
}

struct TrainArgs {
  std::string input, output, raw_output, context_output;
  int order = 2;
  std::size_t dim = 128;
  int negatives = 5;
  std::optional<std::uint64_t> samples;
  double rho0 = 0.025;
  int threads = 1;
  std::uint64_t seed = 42;
  bool undirected = false;
  std::string mode = "edge-sampling";
  std::optional<double> clip;
  bool progress = false;
};

int cmd_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  TrainConfig cfg;
  cfg.order = parse_order(a.order);
  cfg.dim = a.dim;
  cfg.negatives = a.negatives;
  cfg.rho0 = a.rho0;
  cfg.threads = a.threads;
  cfg.seed = a.seed;
  if (a.mode == "edge-sampling" && a.clip) {
    throw UsageError("--clip applies only to --mode sgd");
  }
  if (!a.context_output.empty() && cfg.order == Order::kFirst) {
    throw UsageError("--context-output requires --order 2");
  }
  Graph g = load_edge_list_file(a.input, directedness(a.undirected));
  if (cfg.order == Order::kFirst && !g.undirected()) {
    throw UsageError(
        "--order 1 requires an undirected graph: first-order proximity is "
        "only defined for undirected edges (pass --undirected)");
  }
  cfg.total_samples = a.samples.value_or(default_total_samples(g, a.negatives));
  cfg.validate();

  TrainHooks hooks;
  if (a.progress) hooks.progress = &err;
  EmbeddingMatrix m =
      a.mode == "sgd"
          ? train_line_sgd(g, cfg,
                           a.clip.value_or(
                               std::numeric_limits<double>::infinity()),
                           hooks)
          : train(g, cfg, hooks);

  if (g.num_vertices() <= kObjectiveVertexLimit) {
    const double objective = cfg.order == Order::kFirst
                                 ? objective_first(g, m)
                                 : objective_second(g, m);
    out << "objective=" << format_general(objective) << "\n";
  }
  const std::vector<std::string>& names = g.vertex_names();
  if (!a.raw_output.empty()) {
    save_embeddings_file(vertex_rows(m), names, a.raw_output);
  }
  if (!a.context_output.empty()) {
    save_embeddings_file(context_rows(m), names, a.context_output);
  }
  save_embeddings_file(normalize(vertex_rows(m)).matrix, names, a.output);
  return kExitOk;
}

struct ReconstructArgs {
  std::string input, output;
  std::size_t threshold = 0;
  std::size_t max_neighbors = 1000;
  bool undirected = false;
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out) {
  Graph g = load_edge_list_file(a.input, directedness(a.undirected));
  Graph r = reconstruct(g, a.threshold, a.max_neighbors);
  write_file_atomically(a.output,
                        [&](std::ostream& os) { save_edge_list(r, os); });
  out << "arcs_added=" << r.num_arcs() - g.num_arcs() << "\n";
  if (g.undirected() && !r.undirected()) {
    out << "note: expanded graph is asymmetric and is written as directed\n";
  }
  return kExitOk;
}

struct StatsArgs {
  std::string input;
  bool undirected = false;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  GraphStats s =
      graph_stats(load_edge_list_file(a.input, directedness(a.undirected)));
  out << "vertices=" << s.num_vertices << "\n"
      << "edges=" << s.num_edges << "\n"
      << "average_degree=" << format_general(s.average_degree) << "\n";
  return kExitOk;
}

struct ConcatArgs {
  std::string first, second, output;
};

int cmd_concat(const ConcatArgs& a) {
  NamedEmbedding first = load_embeddings_file(a.first);
  NamedEmbedding second = load_embeddings_file(a.second);
  EmbeddingMatrix joined = concatenate(
      first.matrix, align_rows(second, first.names, a.second));
  save_embeddings_file(joined, first.names, a.output);
  return kExitOk;
}

struct SimilarArgs {
  std::string embeddings, query;
  std::size_t k = 10;
};

void print_neighbors(const std::vector<Neighbor>& ns,
                     const std::vector<std::string>& names,
                     std::ostream& out) {
  for (const Neighbor& n : ns) {
    out << names[n.id] << " " << format_fixed(n.cosine) << "\n";
  }
}

int cmd_similar(const SimilarArgs& a, std::ostream& out) {
  NamedEmbedding e = load_embeddings_file(a.embeddings);
  print_neighbors(top_k_similar(e.matrix, lookup(e.names, a.query), a.k),
                  e.names, out);
  return kExitOk;
}

struct AnalogyArgs {
  std::string embeddings, a, b, c;
  std::size_t k = 1;
};

int cmd_analogy(const AnalogyArgs& a, std::ostream& out) {
  NamedEmbedding e = load_embeddings_file(a.embeddings);
  print_neighbors(analogy(e.matrix, lookup(e.names, a.a),
                          lookup(e.names, a.b), lookup(e.names, a.c), a.k),
                  e.names, out);
  return kExitOk;
}

struct ClassifyArgs {
  std::string embeddings, labels;
  double train_fraction = 0.5;
  std::size_t runs = 10;
  std::uint64_t seed = 42;
  double l2 = 1.0;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  NamedEmbedding e = load_embeddings_file(a.embeddings);
  LabeledSet labels = load_labels_file(a.labels, e.names);
  ClassifierOptions options;
  options.l2 = a.l2;
  EvalReport r =
      classify(e.matrix, labels, a.train_fraction, a.runs, a.seed, options);
  out << "micro_f1=" << format_fixed(r.micro_f1) << "\n"
      << "macro_f1=" << format_fixed(r.macro_f1) << "\n"
      << "runs=" << r.runs.size() << "\n";
  if (r.degenerate_labels > 0) {
    out << "degenerate_labels=" << r.degenerate_labels << "\n";
  }
  return kExitOk;
}

struct InferArgs {
  std::string graph, embeddings, contexts, edges, name, output;
  int order = 2;
  int negatives = 5;
  std::uint64_t samples = 100'000;
  double rho0 = 0.025;
  std::uint64_t seed = 42;
  bool undirected = false;
};

int cmd_infer(const InferArgs& a) {
  TrainConfig cfg;
  cfg.order = parse_order(a.order);
  cfg.negatives = a.negatives;
  cfg.total_samples = a.samples;
  cfg.rho0 = a.rho0;
  cfg.seed = a.seed;
  if (a.name.empty() || a.name.find_first_of(" \t\r\n") != std::string::npos) {
    throw UsageError("--name must be non-empty without whitespace");
  }
  if (cfg.order == Order::kSecond && a.contexts.empty()) {
    throw UsageError("--order 2 requires --contexts");
  }
  Graph g = load_edge_list_file(a.graph, directedness(a.undirected));
  if (cfg.order == Order::kFirst && !g.undirected()) {
    throw UsageError(
        "--order 1 requires an undirected graph: first-order proximity is "
        "only defined for undirected edges (pass --undirected)");
  }
  if (g.find_vertex(a.name)) {
    throw UsageError("vertex '" + a.name + "' already exists in the graph");
  }
  EmbeddingMatrix vertices =
      align_rows(load_embeddings_file(a.embeddings), g.vertex_names(),
                 a.embeddings);
  cfg.dim = vertices.dim();
  cfg.validate();
  EmbeddingMatrix m(g.num_vertices(), cfg.dim, cfg.order == Order::kSecond);
  std::copy(vertices.vertex_data().begin(), vertices.vertex_data().end(),
            m.vertex_data().begin());
  if (cfg.order == Order::kSecond) {
    EmbeddingMatrix contexts = align_rows(load_embeddings_file(a.contexts),
                                          g.vertex_names(), a.contexts);
    if (contexts.dim() != cfg.dim) {
      throw UsageError("--contexts dimension differs from --embeddings");
    }
    std::copy(contexts.vertex_data().begin(), contexts.vertex_data().end(),
              m.context_data().begin());
  }
  std::vector<double> u =
      infer_new_vertex(g, m, load_new_edges(a.edges, g), cfg);
  EmbeddingMatrix row(1, cfg.dim, false);
  std::copy(u.begin(), u.end(), row.vertex(0).begin());
  save_embeddings_file(row, {a.name}, a.output);
  return kExitOk;
}

CLI::Option* add_input(CLI::App* app, std::string& path, const char* name,
                       const char* help) {
  return app->add_option(name, path, help)->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"LINE graph embedding toolkit", "line"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "Train embeddings");
  add_input(train_cmd, train_args.input, "--input", "Edge list");
  add_input(train_cmd, train_args.output, "--output",
            "Normalized vertex embeddings");
  train_cmd->add_option("--raw-output", train_args.raw_output,
                        "Vertex embeddings before normalization");
  train_cmd->add_option("--context-output", train_args.context_output,
                        "Context vectors (order 2)");
  train_cmd->add_option("--order", train_args.order, "1 or 2")
      ->capture_default_str();
  train_cmd->add_option("--dim", train_args.dim)->capture_default_str();
  train_cmd->add_option("--negatives", train_args.negatives)
      ->capture_default_str();
  train_cmd->add_option("--samples", train_args.samples,
                        "Default 100 * |E| * (K + 1)");
  train_cmd->add_option("--rho0", train_args.rho0)->capture_default_str();
  train_cmd->add_option("--threads", train_args.threads)
      ->capture_default_str();
  train_cmd->add_option("--seed", train_args.seed)->capture_default_str();
  train_cmd->add_flag("--undirected", train_args.undirected);
  train_cmd->add_option("--mode", train_args.mode)
      ->check(CLI::IsMember({"edge-sampling", "sgd"}))
      ->capture_default_str();
  train_cmd->add_option("--clip", train_args.clip,
                        "Per-parameter gradient bound for --mode sgd");
  train_cmd->add_flag("--progress", train_args.progress,
                      "Report progress on stderr");

  ReconstructArgs rec_args;
  CLI::App* rec_cmd = app.add_subcommand(
      "reconstruct", "Add second-order neighbors to low-degree vertices");
  add_input(rec_cmd, rec_args.input, "--input", "Edge list");
  add_input(rec_cmd, rec_args.output, "--output", "Expanded edge list");
  rec_cmd->add_option("--threshold", rec_args.threshold)->required();
  rec_cmd->add_option("--max-neighbors", rec_args.max_neighbors)
      ->capture_default_str();
  rec_cmd->add_flag("--undirected", rec_args.undirected);

  StatsArgs stats_args;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  CLI::App* stats_cmd = graph_cmd->add_subcommand("stats", "Size summary");
  add_input(stats_cmd, stats_args.input, "--input", "Edge list");
  stats_cmd->add_flag("--undirected", stats_args.undirected);

  ConcatArgs concat_args;
  CLI::App* concat_cmd = app.add_subcommand(
      "concat", "Concatenate two normalized embedding files");
  add_input(concat_cmd, concat_args.first, "--first", "Embedding file");
  add_input(concat_cmd, concat_args.second, "--second", "Embedding file");
  add_input(concat_cmd, concat_args.output, "--output", "Embedding file");

  SimilarArgs similar_args;
  CLI::App* similar_cmd =
      app.add_subcommand("similar", "Nearest neighbors by cosine");
  add_input(similar_cmd, similar_args.embeddings, "--embeddings",
            "Embedding file");
  add_input(similar_cmd, similar_args.query, "--query", "Vertex name");
  similar_cmd->add_option("--k", similar_args.k)->capture_default_str();

  AnalogyArgs analogy_args;
  CLI::App* analogy_cmd =
      app.add_subcommand("analogy", "Solve a:b :: c:?");
  add_input(analogy_cmd, analogy_args.embeddings, "--embeddings",
            "Embedding file");
  add_input(analogy_cmd, analogy_args.a, "--a", "Vertex name");
  add_input(analogy_cmd, analogy_args.b, "--b", "Vertex name");
  add_input(analogy_cmd, analogy_args.c, "--c", "Vertex name");
  analogy_cmd->add_option("--k", analogy_args.k)->capture_default_str();

  ClassifyArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "One-vs-rest logistic regression, micro/macro-F1");
  add_input(classify_cmd, classify_args.embeddings, "--embeddings",
            "Embedding file");
  add_input(classify_cmd, classify_args.labels, "--labels",
            "Lines of 'vertex label[,label...]'");
  classify_cmd->add_option("--train-fraction", classify_args.train_fraction)
      ->capture_default_str();
  classify_cmd->add_option("--runs", classify_args.runs)
      ->capture_default_str();
  classify_cmd->add_option("--seed", classify_args.seed)
      ->capture_default_str();
  classify_cmd->add_option("--l2", classify_args.l2)->capture_default_str();

  InferArgs infer_args;
  CLI::App* infer_cmd =
      app.add_subcommand("infer", "Embed a vertex unseen during training");
  add_input(infer_cmd, infer_args.graph, "--graph", "Training edge list");
  add_input(infer_cmd, infer_args.embeddings, "--embeddings",
            "Raw vertex embeddings");
  infer_cmd->add_option("--contexts", infer_args.contexts,
                        "Context vectors (order 2)");
  add_input(infer_cmd, infer_args.edges, "--edges",
            "Lines of 'neighbor weight'");
  add_input(infer_cmd, infer_args.name, "--name", "Name of the new vertex");
  add_input(infer_cmd, infer_args.output, "--output", "Embedding file");
  infer_cmd->add_option("--order", infer_args.order)->capture_default_str();
  infer_cmd->add_option("--negatives", infer_args.negatives)
      ->capture_default_str();
  infer_cmd->add_option("--samples", infer_args.samples)
      ->capture_default_str();
  infer_cmd->add_option("--rho0", infer_args.rho0)->capture_default_str();
  infer_cmd->add_option("--seed", infer_args.seed)->capture_default_str();
  infer_cmd->add_flag("--undirected", infer_args.undirected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(train_args, out, err);
    if (rec_cmd->parsed()) return cmd_reconstruct(rec_args, out);
    if (stats_cmd->parsed()) return cmd_stats(stats_args, out);
    if (concat_cmd->parsed()) return cmd_concat(concat_args);
    if (similar_cmd->parsed()) return cmd_similar(similar_args, out);
    if (analogy_cmd->parsed()) return cmd_analogy(analogy_args, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_args, out);
    if (infer_cmd->parsed()) return cmd_infer(infer_args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace line::cli
