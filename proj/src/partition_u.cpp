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

#include "parsa/partition_u.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace parsa {

UPartition UPartition::from_assignment(std::uint32_t k, std::vector<PartitionId> assign) {
  UPartition up;
  up.k = k;
  up.sizes.assign(k, 0);
  for (PartitionId p : assign) {
    if (p >= k) throw std::invalid_argument("partition id out of range");
    up.sizes[p]++;
  }
  up.assign = std::move(assign);
  return up;
}

std::uint64_t UPartition::max_size() const {
  std::uint64_t m = 0;
  for (std::uint64_t s : sizes) m = std::max(m, s);
  return m;
}

void GreedyConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
}

std::int64_t vertex_cost(const BipartiteGraph& g, VertexId u, PartitionId i,
                         const NeighborSets& sets) {
  std::int64_t c = 0;
  for (VertexId v : g.neighbors_of_u(u))
    if (!sets.contains(i, v)) ++c;
  return c;
}

namespace {

PartitionId pick_partition(const NeighborSets& sets, const std::vector<std::uint64_t>& part_sizes,
                           BalanceRule rule) {
  const std::uint32_t k = sets.parts();
  PartitionId best = 0;
  for (PartitionId i = 1; i < k; ++i) {
    if (rule == BalanceRule::kNeighborSetSize) {
      if (sets.size(i) < sets.size(best) ||
          (sets.size(i) == sets.size(best) && part_sizes[i] < part_sizes[best]))
        best = i;
    } else {
      if (part_sizes[i] < part_sizes[best]) best = i;
    }
  }
  return best;
}

}  // namespace

BlockPartitionResult partition_block(const SubgraphBlock& block, NeighborSets& sets,
                                     BalanceRule rule, std::vector<std::uint64_t>& part_sizes,
                                     std::int32_t head_cap) {
  const std::uint32_t k = sets.parts();
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  if (part_sizes.size() != k) throw std::invalid_argument("part_sizes size mismatch");

  const BipartiteGraph& local = block.local;
  const std::size_t n = block.u_ids.size();

  BlockPartitionResult result;
  result.assign.assign(n, kUnassigned);
  result.added.assign(k, {});

  // Initial costs |N(u) \ S_i| per partition, O(k |E_block|).
  std::vector<CostIndex> index;
  index.reserve(k);
  {
    std::vector<std::int32_t> costs(n);
    for (PartitionId i = 0; i < k; ++i) {
      for (std::size_t lu = 0; lu < n; ++lu) {
        std::int32_t c = 0;
        for (VertexId lv : local.neighbors_of_u(static_cast<VertexId>(lu)))
          if (!sets.contains(i, block.v_global[lv])) ++c;
        costs[lu] = c;
      }
      index.emplace_back(std::span<const std::int32_t>(costs), head_cap);
    }
  }

  for (std::size_t step = 0; step < n; ++step) {
    const PartitionId target = pick_partition(sets, part_sizes, rule);
    const auto entry = index[target].min();
    assert(entry.has_value());
    const VertexId u = entry->id;

    assert(entry->cost ==
           [&] {
             std::int32_t c = 0;
             for (VertexId lv : local.neighbors_of_u(u))
               if (!sets.contains(target, block.v_global[lv])) ++c;
             return c;
           }());

    result.assign[u] = target;
    part_sizes[target]++;
    for (PartitionId i = 0; i < k; ++i) index[i].remove(u);

    if (entry->cost == 0) continue;  // nothing new enters S_target
    for (VertexId lv : local.neighbors_of_u(u)) {
      const VertexId v = block.v_global[lv];
      if (!sets.insert(target, v)) continue;
      result.added[target].push_back(v);
      for (VertexId other : local.neighbors_of_v(lv))
        if (index[target].contains(other)) index[target].decrement(other);
    }
  }
  for (auto& vs : result.added) std::sort(vs.begin(), vs.end());
  return result;
}

std::vector<std::vector<VertexId>> block_neighbor_sets(const SubgraphBlock& block,
                                                       const std::vector<PartitionId>& assign,
                                                       std::uint32_t k) {
  std::vector<Bitset> seen(k, Bitset(block.v_global.size()));
  for (std::size_t lu = 0; lu < block.u_ids.size(); ++lu) {
    const PartitionId p = assign[lu];
    for (VertexId lv : block.local.neighbors_of_u(static_cast<VertexId>(lu))) seen[p].set(lv);
  }
  std::vector<std::vector<VertexId>> out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i].reserve(seen[i].count());
    seen[i].for_each([&](std::size_t lv) { out[i].push_back(block.v_global[lv]); });
  }
  return out;
}

std::pair<UPartition, NeighborSets> run_sequential(const BipartiteGraph& g,
                                                   const GreedyConfig& cfg,
                                                   const NeighborSets* initial_sets) {
  cfg.validate();
  NeighborSets sets = initial_sets ? *initial_sets : NeighborSets(cfg.k, g.num_v());
  if (sets.parts() != cfg.k || sets.universe() != g.num_v())
    throw std::invalid_argument("initial sets shape mismatch");

  if (g.num_u() == 0)
    return {UPartition::from_assignment(cfg.k, {}), std::move(sets)};

  SubgraphDivision division(g, cfg.b, cfg.seed);

  // Initialization passes: partition a block, then reset S to exactly that
  // block's neighbor sets; the assignments themselves are dropped. Passes
  // cycle over the first blocks when a > b.
  std::vector<std::uint64_t> scratch_sizes(cfg.k, 0);
  for (std::uint32_t pass = 0; pass < cfg.a; ++pass) {
    const SubgraphBlock block = division.block(pass % cfg.b);
    std::fill(scratch_sizes.begin(), scratch_sizes.end(), 0);
    BlockPartitionResult res =
        partition_block(block, sets, cfg.balance_rule, scratch_sizes, cfg.head_cap);
    const auto reset_members = block_neighbor_sets(block, res.assign, cfg.k);
    for (PartitionId i = 0; i < cfg.k; ++i) sets.reset(i, reset_members[i]);
  }

  // Production passes: union the per-block assignments.
  std::vector<PartitionId> assign(g.num_u(), kUnassigned);
  std::vector<std::uint64_t> part_sizes(cfg.k, 0);
  for (std::uint32_t j = 0; j < cfg.b; ++j) {
    const SubgraphBlock block = division.block(j);
    BlockPartitionResult res =
        partition_block(block, sets, cfg.balance_rule, part_sizes, cfg.head_cap);
    for (std::size_t lu = 0; lu < block.u_ids.size(); ++lu)
      assign[block.u_ids[lu]] = res.assign[lu];
  }
  return {UPartition::from_assignment(cfg.k, std::move(assign)), std::move(sets)};
}

NeighborSets neighbor_sets_of(const BipartiteGraph& g, const UPartition& up) {
  NeighborSets sets(up.k, g.num_v());
  for (VertexId u = 0; u < g.num_u(); ++u)
    for (VertexId v : g.neighbors_of_u(u)) sets.insert(up.assign[u], v);
  return sets;
}

}  // namespace parsa
