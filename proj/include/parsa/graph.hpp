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
#include <span>
#include <utility>
#include <vector>

#include "parsa/types.hpp"

namespace parsa {

// Immutable sparse bipartite graph G(U, V, E) in CSR form, stored in both
// directions. U holds the data vertices, V the parameter vertices. Neighbor
// lists are strictly increasing and duplicate-free; the two directions are
// exact transposes of each other. Safe to share across threads once built.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Builds from an edge list; edges are sorted and deduplicated. Endpoints
  // must satisfy u < num_u and v < num_v.
  static BipartiteGraph from_edges(VertexId num_u, VertexId num_v,
                                   std::vector<std::pair<VertexId, VertexId>> edges);

  // Builds from per-u neighbor lists (each list sorted, duplicate-free).
  static BipartiteGraph from_adjacency(VertexId num_v, std::vector<std::vector<VertexId>> adj_u);

  VertexId num_u() const { return num_u_; }
  VertexId num_v() const { return num_v_; }
  EdgeCount num_edges() const { return u_adj_.size(); }

  std::span<const VertexId> neighbors_of_u(VertexId u) const {
    return {u_adj_.data() + u_offsets_[u], u_adj_.data() + u_offsets_[u + 1]};
  }
  std::span<const VertexId> neighbors_of_v(VertexId v) const {
    return {v_adj_.data() + v_offsets_[v], v_adj_.data() + v_offsets_[v + 1]};
  }

  std::size_t degree_u(VertexId u) const { return u_offsets_[u + 1] - u_offsets_[u]; }
  std::size_t degree_v(VertexId v) const { return v_offsets_[v + 1] - v_offsets_[v]; }

  std::span<const EdgeCount> u_offsets() const { return u_offsets_; }
  std::span<const VertexId> u_adjacency() const { return u_adj_; }

  // Full structural check (transpose round trip, sortedness, counts).
  // Used by loaders and tests; throws std::logic_error on violation.
  void validate() const;

 private:
  void build_transpose();

  VertexId num_u_ = 0;
  VertexId num_v_ = 0;
  std::vector<EdgeCount> u_offsets_{0};
  std::vector<VertexId> u_adj_;
  std::vector<EdgeCount> v_offsets_{0};
  std::vector<VertexId> v_adj_;
};

// One block of a random division of U. u_ids maps local u index -> global
// u id (ascending); v_global maps local v index -> global v id (ascending).
// local covers exactly the block's u vertices and the union of their
// neighborhoods.
struct SubgraphBlock {
  std::uint32_t block_id = 0;
  std::vector<VertexId> u_ids;
  std::vector<VertexId> v_global;
  BipartiteGraph local;
};

// A seeded random division of U into contiguous chunks of a shuffled
// permutation (chunk sizes differ by at most one). Blocks are materialized
// one at a time so only the current subgraph needs to live in memory.
class SubgraphDivision {
 public:
  SubgraphDivision(const BipartiteGraph& g, std::uint32_t num_blocks, std::uint64_t seed);

  std::uint32_t num_blocks() const { return num_blocks_; }
  std::span<const VertexId> block_u_ids(std::uint32_t j) const;
  SubgraphBlock block(std::uint32_t j) const;

 private:
  const BipartiteGraph* g_;
  std::uint32_t num_blocks_;
  std::vector<VertexId> order_;       // permuted u ids, ascending within each chunk
  std::vector<std::size_t> bounds_;   // num_blocks_ + 1 chunk boundaries
};

// Materializes every block at once. Convenience for small inputs and tests;
// large runs should iterate SubgraphDivision::block instead.
std::vector<SubgraphBlock> divide_into_subgraphs(const BipartiteGraph& g, std::uint32_t num_blocks,
                                                 std::uint64_t seed);

// Builds a block (id 0) over an explicit set of u ids, e.g. a sampled
// subgraph for global initialization. u_ids need not be sorted.
SubgraphBlock make_block(const BipartiteGraph& g, std::vector<VertexId> u_ids,
                         std::uint32_t block_id = 0);

}  // namespace parsa
