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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.h"
#include "line/embedding_io.h"
#include "line/graph.h"

namespace line {
namespace {

using testing::read_file;
using testing::TempDir;
using testing::write_file;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "line");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Graph load(const std::filesystem::path& p) {
  return load_edge_list_file(p, Directedness::kUndirected);
}

std::set<std::tuple<std::string, std::string, double>> named_arcs(
    const Graph& g) {
  std::set<std::tuple<std::string, std::string, double>> arcs;
  for (const Arc& a : g.arcs()) {
    arcs.emplace(g.vertex_name(a.source), g.vertex_name(a.target), a.weight);
  }
  return arcs;
}

class CliTest : public ::testing::Test {
 protected:
  std::string file(const std::string& name, const std::string& text = "") {
    std::string p = dir_.file(name).string();
    if (!text.empty()) write_file(p, text);
    return p;
  }
  TempDir dir_;
};

const char kSquare[] = "a b 1\nb c 1\nc d 2\nd a 1\n";

TEST_F(CliTest, TrainIsByteReproducible) {
  std::string g = file("g.txt", kSquare);
  std::vector<std::string> args = {"train",  "--input", g,     "--undirected",
                                   "--dim",  "8",       "--samples", "20000",
                                   "--seed", "5"};
  auto first = args, second = args;
  first.insert(first.end(), {"--output", file("e1.txt")});
  second.insert(second.end(), {"--output", file("e2.txt")});
  ASSERT_EQ(run(first).code, 0);
  ASSERT_EQ(run(second).code, 0);
  EXPECT_EQ(read_file(file("e1.txt")), read_file(file("e2.txt")));
}

TEST_F(CliTest, TrainDefaultsAndObjective) {
  std::string g = file("g.txt", kSquare), e = file("e.txt");
  Result r = run({"train", "--input", g, "--output", e, "--samples", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("objective=", 0), 0u);
  NamedEmbedding loaded = load_embeddings_file(e);
  EXPECT_EQ(loaded.matrix.dim(), 128u);
  EXPECT_EQ(loaded.names, (std::vector<std::string>{"a", "b", "c", "d"}));
}

TEST_F(CliTest, FirstOrderOnDirectedInputIsRejected) {
  std::string g = file("g.txt", kSquare), e = file("e.txt");
  Result r = run({"train", "--input", g, "--output", e, "--order", "1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("undirected"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(e));
}

TEST_F(CliTest, SgdModeAndClipFlags) {
  std::string g = file("g.txt", kSquare), e = file("e.txt");
  EXPECT_EQ(run({"train", "--input", g, "--output", e, "--dim", "4",
                 "--samples", "1000", "--mode", "sgd", "--clip", "1"})
                .code,
            0);
  EXPECT_EQ(run({"train", "--input", g, "--output", e, "--clip", "1"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"train", "--input", g, "--output", e, "--mode", "other"}).code,
            cli::kExitUsage);
}

TEST_F(CliTest, ReconstructPathGraph) {
  std::string in = file("path.txt", "a b 1\nb c 1\n"), out = file("r.txt");
  Result r = run({"reconstruct", "--input", in, "--output", out,
                  "--threshold", "2", "--undirected"});
  ASSERT_EQ(r.code, 0) << r.err;
  Graph g = load(out);
  EXPECT_NEAR(g.arc_weight(*g.find_vertex("a"), *g.find_vertex("c")), 0.5,
              1e-12);
  EXPECT_EQ(g.num_arcs(), 6u);
}

TEST_F(CliTest, ReconstructStarGraph) {
  std::string in = file("star.txt", "h x 1\nh y 1\nh z 1\n");
  std::string out = file("r.txt");
  ASSERT_EQ(run({"reconstruct", "--input", in, "--output", out,
                 "--threshold", "2", "--undirected"})
                .code,
            0);
  Graph g = load(out);
  const VertexId x = *g.find_vertex("x");
  EXPECT_NEAR(g.arc_weight(x, *g.find_vertex("y")), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(g.arc_weight(x, *g.find_vertex("z")), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(g.neighbor_count(*g.find_vertex("h")), 3u);
}

TEST_F(CliTest, ReconstructThresholdZeroKeepsGraph) {
  std::string in = file("g.txt", "# square\na b 1.0\nb  c 1\nc d 2\nd a 1\n");
  std::string out = file("r.txt");
  ASSERT_EQ(run({"reconstruct", "--input", in, "--output", out,
                 "--threshold", "0", "--undirected"})
                .code,
            0);
  EXPECT_EQ(named_arcs(load(in)), named_arcs(load(out)));
}

TEST_F(CliTest, GraphStats) {
  Result r = run({"graph", "stats", "--input", file("g.txt", kSquare),
                  "--undirected"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vertices=4\nedges=4\naverage_degree=2\n");
}

TEST_F(CliTest, ConcatDoublesDimension) {
  std::string a = file("a.txt"), b = file("b.txt"), out = file("ab.txt");
  std::string g = file("g.txt", kSquare);
  for (const auto& [path, order] : {std::pair{a, "2"}, std::pair{b, "1"}}) {
    ASSERT_EQ(run({"train", "--input", g, "--output", path, "--undirected",
                   "--order", order, "--dim", "8", "--samples", "1000"})
                  .code,
              0);
  }
  ASSERT_EQ(run({"concat", "--first", a, "--second", b, "--output", out}).code,
            0);
  EXPECT_EQ(load_embeddings_file(out).matrix.dim(), 16u);
}

TEST_F(CliTest, SimilarFindsDuplicateRow) {
  std::string e = file("e.txt",
                       "3 2\nx 0.6 0.8\ny 1 0\ncopy 0.6 0.8\n");
  Result r = run({"similar", "--embeddings", e, "--query", "x", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "copy 1.000000\n");
  EXPECT_EQ(run({"similar", "--embeddings", e, "--query", "q"}).code,
            cli::kExitUsage);
}

TEST_F(CliTest, AnalogyPlanted) {
  std::string e = file("e.txt",
                       "5 3\na 1 0 0\nb 1 1 0\nc 0 0 1\nd 0 1 1\ne 0 -1 0\n");
  Result r = run({"analogy", "--embeddings", e, "--a", "a", "--b", "b", "--c",
                  "c"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "d 1.000000\n");
}

TEST_F(CliTest, ClassifySeparableFixture) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.2);
  std::string emb = "40 2\n", labels;
  for (int v = 0; v < 40; ++v) {
    double centre = v % 2 ? 2.0 : -2.0;
    emb += "v" + std::to_string(v) + " " + std::to_string(centre + noise(rng)) +
           " " + std::to_string(noise(rng)) + "\n";
    labels += "v" + std::to_string(v) + (v % 2 ? " odd\n" : " even\n");
  }
  Result r = run({"classify", "--embeddings", file("e.txt", emb), "--labels",
                  file("l.txt", labels), "--train-fraction", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("micro_f1=1.000000\n"), std::string::npos);
  EXPECT_NE(r.out.find("macro_f1=1.000000\n"), std::string::npos);
  EXPECT_NE(r.out.find("runs=10\n"), std::string::npos);
}

TEST_F(CliTest, InferWritesSingleRow) {
  std::string g = file("g.txt", kSquare), raw = file("raw.txt"),
              ctx = file("ctx.txt"), out = file("new.txt");
  ASSERT_EQ(run({"train", "--input", g, "--output", file("e.txt"),
                 "--raw-output", raw, "--context-output", ctx, "--dim", "4",
                 "--samples", "5000"})
                .code,
            0);
  std::string edges = file("edges.txt", "b 1\nd 2\n");
  Result r = run({"infer", "--graph", g, "--embeddings", raw, "--contexts", ctx,
                  "--edges", edges, "--name", "z", "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  NamedEmbedding e = load_embeddings_file(out);
  EXPECT_EQ(e.names, std::vector<std::string>{"z"});
  EXPECT_EQ(e.matrix.dim(), 4u);

  EXPECT_EQ(run({"infer", "--graph", g, "--embeddings", raw, "--edges", edges,
                 "--name", "z", "--output", out})
                .code,
            cli::kExitUsage);
  std::string bad = file("bad.txt", "b -1\n");
  EXPECT_EQ(run({"infer", "--graph", g, "--embeddings", raw, "--contexts", ctx,
                 "--edges", bad, "--name", "y", "--output", file("y.txt")})
                .code,
            cli::kExitDomain);
  EXPECT_FALSE(std::filesystem::exists(file("y.txt")));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"train", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"train", "--input", file("g.txt", kSquare)}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"graph", "stats", "--input", file("missing.txt")}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);

  Result parse = run({"graph", "stats", "--input",
                      file("p.txt", "a b 1\nb c x\n")});
  EXPECT_EQ(parse.code, cli::kExitParse);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"graph", "stats", "--input", file("d.txt", "a b -1\n")}).code,
            cli::kExitDomain);
  EXPECT_EQ(run({"similar", "--embeddings", file("e.txt", "2 2\nx 1\n"),
                 "--query", "x"})
                .code,
            cli::kExitParse);
}

TEST_F(CliTest, FailedRunLeavesNoOutput) {
  std::string g = file("g.txt", kSquare), e = file("e.txt");
  EXPECT_NE(run({"train", "--input", g, "--output", e, "--dim", "0"}).code, 0);
  EXPECT_FALSE(std::filesystem::exists(e));
  std::string dir_output = dir_.path().string();
  EXPECT_NE(run({"reconstruct", "--input", g, "--output", dir_output,
                 "--threshold", "1"})
                .code,
            0);
  for (const auto& entry : std::filesystem::directory_iterator(dir_.path())) {
    EXPECT_EQ(entry.path().extension(), ".txt") << entry.path();
  }
}

}  // namespace
}  // namespace line
