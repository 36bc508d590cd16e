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
#include <vector>

#include "parsa/graph.hpp"
#include "parsa/partition_u.hpp"

namespace parsa {

// Desk-scale submodular-approximation partitioner. Each round grows the
// smallest partition by the subset T* of a random candidate sample R that
// minimizes g_i(T) = f(T ∪ U_i) - alpha * |T ∪ U_i| with f(U) = |N(U)|,
// committing only when g_i(T*) <= 0. Exists for theory checks; the
// production path is run_sequential / run_parallel.
struct ReferenceConfig {
  std::uint32_t k = 2;
  double alpha = 1.0;
  double theta_residue = 1.0;  // stop early once |remaining| <= k * theta
  std::uint64_t max_iters = 1000;
  std::uint64_t seed = 0;
};

struct ReferenceResult {
  bool success = false;
  UPartition partition;        // valid only on success
  std::uint64_t iterations = 0;
  std::uint64_t commits = 0;
};

// Exhaustive minimizer of g_i over all subsets of candidates (|candidates|
// <= 20). Ties prefer fewer elements, then the lexicographically smaller
// sorted id vector; the empty set is always in the running. Returns T*.
std::vector<VertexId> reference_round(const BipartiteGraph& g,
                                      std::span<const VertexId> candidates,
                                      std::span<const VertexId> current_members, double alpha);

// Algorithm: repeatedly sample R from the remaining vertices with
// per-vertex probability n/(|remaining| k) (n = |U| at entry, capped at 1),
// skip oversized samples (|R| > 2n/k), solve the round and commit when the
// improvement condition holds. Fails (as a value) when the residue is still
// larger than k * theta after the iteration budget; otherwise the remainder
// is spread evenly (each to the currently smallest partition, ascending id).
ReferenceResult run_reference(const BipartiteGraph& g, const ReferenceConfig& cfg);

// |N(S)| for a set of data vertices; the submodular objective.
std::uint64_t neighbor_count(const BipartiteGraph& g, std::span<const VertexId> us);

}  // namespace parsa
