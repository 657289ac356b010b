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

#ifndef LINE_EMBEDDING_IO_H_
#define LINE_EMBEDDING_IO_H_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "line/embedding.h"

namespace line {

// word2vec text format:
//   <count> <dim>
//   <name> <v1> ... <vd>
// Values are written with 9 significant digits. Only vertex rows are stored.
struct NamedEmbedding {
  std::vector<std::string> names;
  EmbeddingMatrix matrix;
};

// Throws UsageError if names do not match the rows or contain whitespace,
// DomainError on non-finite values.
void save_embeddings(const EmbeddingMatrix& m,
                     const std::vector<std::string>& names, std::ostream& out);
// Throws ParseError (with line number) on any malformed header or row.
NamedEmbedding load_embeddings(std::istream& in);

void save_embeddings_file(const EmbeddingMatrix& m,
                          const std::vector<std::string>& names,
                          const std::filesystem::path& path);
NamedEmbedding load_embeddings_file(const std::filesystem::path& path);

// Writes through a sibling temporary file that is renamed over `path` only
// after `write` returns normally; on failure the temporary is removed.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& write);

}  // namespace line

#endif  // LINE_EMBEDDING_IO_H_
