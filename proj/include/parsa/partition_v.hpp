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
#include "parsa/types.hpp"

namespace parsa {

// Assignment of parameter vertices to servers 0..k-1. Every vertex with at
// least one edge lives on a machine whose neighbor set needs it; vertices
// with no edges are placed round-robin and excluded from traffic accounting.
struct VPartition {
  std::uint32_t k = 0;
  std::vector<PartitionId> assign;
  std::vector<std::uint64_t> sizes;
  std::uint32_t isolated_count = 0;
};

// One greedy sweep over V in ascending id order. neighbor_sets must be the
// exact sets N(U_i) of a U-partition. Starting costs are |N(U_i)| (or the
// costs implied by `prior` when re-sweeping); each vertex goes to the
// feasible machine with the lowest running cost, ties to the smaller index.
VPartition sweep(const BipartiteGraph& g, const NeighborSets& neighbor_sets,
                 const VPartition* prior = nullptr);

// Sweeps until no vertex moves or max_sweeps is reached. The per-machine
// cost maximum never increases between sweeps. Returns the assignment and
// the number of sweeps performed.
std::pair<VPartition, std::uint32_t> sweep_to_convergence(const BipartiteGraph& g,
                                                          const NeighborSets& neighbor_sets,
                                                          std::uint32_t max_sweeps,
                                                          const VPartition* prior = nullptr);

}  // namespace parsa
