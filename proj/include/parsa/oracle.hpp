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

#include "parsa/graph.hpp"
#include "parsa/neighbor_sets.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/types.hpp"

namespace parsa {

// Reference implementations used by property tests and the acceptance suite.
// They trade all performance for being obviously correct.

struct OracleResult {
  UPartition best;
  std::uint64_t best_value = 0;   // min over assignments of max_i |N(U_i)|
  std::uint64_t enumerated = 0;   // complete assignments evaluated
};

// Exhaustive minimizer of max_i |N(U_i)| over all k-way assignments, with
// first-occurrence symmetry breaking over interchangeable partition labels.
// Ties resolve to the lexicographically smallest canonical assignment.
// Guarded by k^|U| <= 10^7.
OracleResult exhaustive_partition(const BipartiteGraph& g, std::uint32_t k);

// Same contract, tie rule and outputs as partition_block, but every cost is
// recomputed by scanning and the tie order is tracked with explicit
// timestamps instead of the linked-list structure. Exists solely as the
// equivalence oracle for the fast path.
BlockPartitionResult naive_greedy(const SubgraphBlock& block, NeighborSets& sets,
                                  BalanceRule rule, std::vector<std::uint64_t>& part_sizes);

}  // namespace parsa
