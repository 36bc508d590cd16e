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

#include "parsa/partition_v.hpp"

#include <stdexcept>

namespace parsa {

VPartition sweep(const BipartiteGraph& g, const NeighborSets& neighbor_sets,
                 const VPartition* prior) {
  const std::uint32_t k = neighbor_sets.parts();
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  if (prior && prior->k != k) throw std::invalid_argument("prior k mismatch");

  VPartition out;
  out.k = k;
  out.assign.assign(g.num_v(), kUnassigned);
  out.sizes.assign(k, 0);

  // cost_i starts at |N(U_i)| and, once every v is placed, equals machine
  // i's communication cost. Re-sweeps start from the costs implied by the
  // prior assignment and retract each vertex before re-placing it.
  std::vector<std::int64_t> cost(k);
  for (PartitionId i = 0; i < k; ++i) cost[i] = static_cast<std::int64_t>(neighbor_sets.size(i));

  std::vector<std::int64_t> sharers(g.num_v(), 0);
  for (VertexId v = 0; v < g.num_v(); ++v) {
    if (g.degree_v(v) == 0) continue;
    std::int64_t d = 0;
    for (PartitionId i = 0; i < k; ++i)
      if (neighbor_sets.contains(i, v)) ++d;
    if (d == 0) throw std::invalid_argument("neighbor sets inconsistent with graph");
    sharers[v] = d;
    if (prior) cost[prior->assign[v]] += d - 2;
  }

  std::uint32_t isolated_seen = 0;
  for (VertexId v = 0; v < g.num_v(); ++v) {
    if (g.degree_v(v) == 0) {
      out.assign[v] = isolated_seen++ % k;
      out.sizes[out.assign[v]]++;
      continue;
    }
    if (prior) cost[prior->assign[v]] -= sharers[v] - 2;

    PartitionId chosen = kUnassigned;
    for (PartitionId i = 0; i < k; ++i) {
      if (!neighbor_sets.contains(i, v)) continue;
      if (chosen == kUnassigned || cost[i] < cost[chosen]) chosen = i;
    }
    out.assign[v] = chosen;
    out.sizes[chosen]++;
    cost[chosen] += sharers[v] - 2;
  }
  out.isolated_count = isolated_seen;
  return out;
}

std::pair<VPartition, std::uint32_t> sweep_to_convergence(const BipartiteGraph& g,
                                                          const NeighborSets& neighbor_sets,
                                                          std::uint32_t max_sweeps,
                                                          const VPartition* prior) {
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

  std::uint32_t count = 0;
  VPartition current;
  if (prior) {
    current = *prior;
  } else {
    current = sweep(g, neighbor_sets);
    ++count;
    if (count == max_sweeps) return {std::move(current), count};
  }
  while (count < max_sweeps) {
    VPartition next = sweep(g, neighbor_sets, &current);
    ++count;
    if (next.assign == current.assign) return {std::move(next), count};
    current = std::move(next);
  }
  return {std::move(current), count};
}

}  // namespace parsa
