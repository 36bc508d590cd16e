/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parsa/graph.hpp"
#include "parsa/types.hpp"

namespace parsa {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// A loaded graph plus the mapping from dense internal ids back to the ids in
// the source file. Empty maps mean the identity (libsvm rows/columns).
struct LoadedGraph {
  BipartiteGraph graph;
  std::vector<std::uint64_t> u_to_original;
  std::vector<std::uint64_t> v_to_original;
  bool identity_ids = true;
};

// libsvm rows: `label idx:val idx:val ...`. Row i becomes u_i, feature
// indices become parameter vertices (num_v = max index + 1); the values are
// discarded since only the sparsity pattern matters. A duplicate index
// within a row is a parse error.
LoadedGraph load_libsvm(const std::string& path);

// Edge list: whitespace-separated `src dst` integer pairs, `#` comments and
// blank lines skipped. Node ids are compacted to a dense range shared by U
// and V; an undirected edge contributes both directions; self loops stay a
// single edge; duplicate edges are deduplicated.
LoadedGraph load_edge_list(const std::string& path, bool directed);

// Binary cache (versioned header + U-side CSR; the V side is rebuilt as the
// transpose). Layout documented in docs/formats.md.
void write_binary_cache(const std::string& path, const BipartiteGraph& g);
BipartiteGraph read_binary_cache(const std::string& path);

void write_id_map(const std::string& path, const LoadedGraph& loaded);

// Partition files: one `<id> <partition>` line per vertex, ascending id.
void write_partition_file(const std::string& path, const std::vector<PartitionId>& assign);
std::vector<PartitionId> read_partition_file(const std::string& path, std::size_t expected);

}  // namespace parsa
