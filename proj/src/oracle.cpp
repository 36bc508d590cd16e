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

#include "parsa/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "parsa/bitset.hpp"

namespace parsa {

namespace {

struct ExhaustiveState {
  const BipartiteGraph* g;
  std::uint32_t k;
  std::vector<PartitionId> assign;
  std::vector<Bitset> sets;
  std::vector<std::uint64_t> set_sizes;
  std::vector<std::vector<VertexId>> undo_log;  // per depth

  std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
  std::vector<PartitionId> best_assign;
  std::uint64_t enumerated = 0;

  void search(VertexId u, std::uint32_t used, std::uint64_t max_so_far) {
    if (max_so_far >= best_value) return;  // max only grows along a branch
    if (u == g->num_u()) {
      ++enumerated;
      best_value = max_so_far;
      best_assign = assign;
      return;
    }
    const std::uint32_t limit = std::min(k, used + 1);
    for (PartitionId p = 0; p < limit; ++p) {
      assign[u] = p;
      std::vector<VertexId>& undo = undo_log[u];
      undo.clear();
      for (VertexId v : g->neighbors_of_u(u)) {
        if (!sets[p].test(v)) {
          sets[p].set(v);
          undo.push_back(v);
        }
      }
      set_sizes[p] += undo.size();
      search(u + 1, std::max(used, p + 1), std::max(max_so_far, set_sizes[p]));
      set_sizes[p] -= undo.size();
      for (VertexId v : undo) sets[p].reset(v);
    }
    assign[u] = kUnassigned;
  }
};

}  // namespace

OracleResult exhaustive_partition(const BipartiteGraph& g, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  double combos = 1.0;
  for (VertexId u = 0; u < g.num_u(); ++u) {
    combos *= k;
    if (combos > 1e7) throw std::invalid_argument("instance too large for exhaustive search");
  }

  ExhaustiveState st;
  st.g = &g;
  st.k = k;
  st.assign.assign(g.num_u(), kUnassigned);
  st.sets.assign(k, Bitset(g.num_v()));
  st.set_sizes.assign(k, 0);
  st.undo_log.assign(std::max<std::size_t>(g.num_u(), 1), {});
  st.search(0, 0, 0);

  OracleResult result;
  result.best = UPartition::from_assignment(k, std::move(st.best_assign));
  result.best_value = st.best_value;
  result.enumerated = st.enumerated;
  return result;
}

BlockPartitionResult naive_greedy(const SubgraphBlock& block, NeighborSets& sets,
                                  BalanceRule rule, std::vector<std::uint64_t>& part_sizes) {
  const std::uint32_t k = sets.parts();
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  if (part_sizes.size() != k) throw std::invalid_argument("part_sizes size mismatch");

  const BipartiteGraph& local = block.local;
  const std::size_t n = block.u_ids.size();

  BlockPartitionResult result;
  result.assign.assign(n, kUnassigned);
  result.added.assign(k, {});

  // Tie order mirror: initially the vertex id, refreshed whenever the fast
  // path would relocate the vertex (i.e. whenever its cost for that
  // partition drops).
  std::vector<std::vector<std::uint64_t>> stamp(k, std::vector<std::uint64_t>(n));
  std::vector<std::uint64_t> stamp_counter(k, n);
  for (PartitionId i = 0; i < k; ++i)
    for (std::size_t u = 0; u < n; ++u) stamp[i][u] = u;

  std::vector<bool> assigned(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    PartitionId target = 0;
    for (PartitionId i = 1; i < k; ++i) {
      if (rule == BalanceRule::kNeighborSetSize) {
        if (sets.size(i) < sets.size(target) ||
            (sets.size(i) == sets.size(target) && part_sizes[i] < part_sizes[target]))
          target = i;
      } else {
        if (part_sizes[i] < part_sizes[target]) target = i;
      }
    }

    // Full scan: recompute every unassigned cost from scratch.
    VertexId best = kInvalidVertex;
    std::int64_t best_cost = 0;
    for (std::size_t lu = 0; lu < n; ++lu) {
      if (assigned[lu]) continue;
      std::int64_t c = 0;
      for (VertexId lv : local.neighbors_of_u(static_cast<VertexId>(lu)))
        if (!sets.contains(target, block.v_global[lv])) ++c;
      if (best == kInvalidVertex || c < best_cost ||
          (c == best_cost && stamp[target][lu] < stamp[target][best]))
      {
        best = static_cast<VertexId>(lu);
        best_cost = c;
      }
    }

    result.assign[best] = target;
    assigned[best] = true;
    part_sizes[target]++;

    if (best_cost == 0) continue;
    for (VertexId lv : local.neighbors_of_u(best)) {
      const VertexId v = block.v_global[lv];
      if (!sets.insert(target, v)) continue;
      result.added[target].push_back(v);
      for (VertexId other : local.neighbors_of_v(lv))
        if (!assigned[other]) stamp[target][other] = stamp_counter[target]++;
    }
  }
  for (auto& vs : result.added) std::sort(vs.begin(), vs.end());
  return result;
}

}  // namespace parsa
