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

#include "line/embedding_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "line/errors.h"

namespace line {
namespace {

bool has_space(const std::string& s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      return true;
    }
  }
  return false;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view token, T& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

void save_embeddings(const EmbeddingMatrix& m,
                     const std::vector<std::string>& names, std::ostream& out) {
  if (names.size() != m.num_vertices()) {
    throw UsageError("expected " + std::to_string(m.num_vertices()) +
                     " names, got " + std::to_string(names.size()));
  }
  for (const std::string& name : names) {
    if (name.empty() || has_space(name)) {
      throw UsageError("vertex name '" + name +
                       "' cannot be written: names must be non-empty and "
                       "free of whitespace");
    }
  }
  if (!m.all_finite()) throw DomainError("embedding has non-finite values");

  out << m.num_vertices() << ' ' << m.dim() << '\n';
  char buf[32];
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    out << names[v];
    for (double x : m.vertex(v)) {
      std::snprintf(buf, sizeof(buf), "%.9g", x);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

NamedEmbedding load_embeddings(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  std::size_t count = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!split_fields(line).empty()) break;
  }
  auto header = split_fields(line);
  if (header.size() != 2 || !parse_number(header[0], count) ||
      !parse_number(header[1], dim)) {
    throw ParseError("expected header '<count> <dim>'", line_number);
  }
  if (count == 0 || dim == 0) {
    throw ParseError("header declares an empty embedding", line_number);
  }

  NamedEmbedding result{{}, EmbeddingMatrix(count, dim, false)};
  result.names.reserve(count);
  std::unordered_set<std::string> seen;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (row == count) {
      throw ParseError("more rows than the header's " + std::to_string(count),
                       line_number);
    }
    if (fields.size() != dim + 1) {
      throw ParseError("expected a name and " + std::to_string(dim) +
                           " values, got " + std::to_string(fields.size()) +
                           " fields",
                       line_number);
    }
    std::string name(fields[0]);
    if (!seen.insert(name).second) {
      throw ParseError("duplicate vertex name '" + name + "'", line_number);
    }
    auto values = result.matrix.vertex(static_cast<VertexId>(row));
    for (std::size_t c = 0; c < dim; ++c) {
      if (!parse_number(fields[c + 1], values[c]) ||
          !std::isfinite(values[c])) {
        throw ParseError("bad value '" + std::string(fields[c + 1]) + "'",
                         line_number);
      }
    }
    result.names.push_back(std::move(name));
    ++row;
  }
  if (row != count) {
    throw ParseError("header declares " + std::to_string(count) +
                         " rows but found " + std::to_string(row),
                     line_number);
  }
  return result;
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& write) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw UsageError("cannot write '" + path.string() + "'");
      write(out);
      out.flush();
      if (!out) throw UsageError("failed writing '" + path.string() + "'");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

void save_embeddings_file(const EmbeddingMatrix& m,
                          const std::vector<std::string>& names,
                          const std::filesystem::path& path) {
  write_file_atomically(
      path, [&](std::ostream& out) { save_embeddings(m, names, out); });
}

NamedEmbedding load_embeddings_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  try {
    return load_embeddings(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

}  // namespace line
