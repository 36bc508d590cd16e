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
#include <utility>
#include <vector>

#include "parsa/cost_index.hpp"
#include "parsa/graph.hpp"
#include "parsa/neighbor_sets.hpp"
#include "parsa/types.hpp"

namespace parsa {

// Assignment of data vertices to partitions 0..k-1.
struct UPartition {
  std::uint32_t k = 0;
  std::vector<PartitionId> assign;
  std::vector<std::uint64_t> sizes;

  static UPartition from_assignment(std::uint32_t k, std::vector<PartitionId> assign);
  std::uint64_t max_size() const;
};

struct GreedyConfig {
  std::uint32_t k = 16;
  std::uint32_t b = 16;        // number of subgraph blocks
  std::uint32_t a = 16;        // initialization passes over the first blocks
  std::uint64_t seed = 0;
  BalanceRule balance_rule = BalanceRule::kNeighborSetSize;
  std::int32_t head_cap = CostIndex::kDefaultHeadCap;

  void validate() const;
};

// |N(u) \ S_i|: how many parameter vertices assigning u to partition i would
// add to that partition's neighbor set.
std::int64_t vertex_cost(const BipartiteGraph& g, VertexId u, PartitionId i,
                         const NeighborSets& sets);

struct BlockPartitionResult {
  // Partition per block-local u index.
  std::vector<PartitionId> assign;
  // Per partition, the v ids newly inserted into S during this block
  // (ascending) — exactly the delta a worker has to push.
  std::vector<std::vector<VertexId>> added;
};

// Greedily assigns every vertex of one block. Per step: pick the target
// partition by the balance rule (ties: smaller |U_i|, then smaller index),
// take that partition's lowest-cost vertex, fold its new neighbors into S_i
// and decrement the affected costs. S and part_sizes are updated in place.
BlockPartitionResult partition_block(const SubgraphBlock& block, NeighborSets& sets,
                                     BalanceRule rule, std::vector<std::uint64_t>& part_sizes,
                                     std::int32_t head_cap = CostIndex::kDefaultHeadCap);

// The full single-process pipeline over a random division into cfg.b blocks:
// cfg.a initialization passes whose assignments are dropped (the neighbor
// sets are reset to exactly the just-processed block's sets after each), then
// cfg.b production passes whose assignments are unioned.
std::pair<UPartition, NeighborSets> run_sequential(const BipartiteGraph& g,
                                                   const GreedyConfig& cfg,
                                                   const NeighborSets* initial_sets = nullptr);

// Exact neighbor sets N(U_i) of an assignment; used to hand a U-partition to
// the V sweep and by soundness checks.
NeighborSets neighbor_sets_of(const BipartiteGraph& g, const UPartition& up);

// N(U_i) restricted to one block's assignment: the replacement sets pushed
// during individual initialization.
std::vector<std::vector<VertexId>> block_neighbor_sets(const SubgraphBlock& block,
                                                       const std::vector<PartitionId>& assign,
                                                       std::uint32_t k);

}  // namespace parsa
