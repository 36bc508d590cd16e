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
#include <optional>
#include <span>
#include <vector>

#include "parsa/types.hpp"

namespace parsa {

// Per-partition vertex costs for one block of U: an array of integer costs
// threaded by a doubly-linked list kept in nondecreasing cost order, plus an
// array of head pointers to the first node of each small cost value.
//
// Costs are monotone: they start at the degree-bounded |N(u) \ S_i| and only
// ever decrease by one or leave (vertex assigned). That makes every
// operation O(1):
//   - min() is the list head;
//   - remove() unlinks and repairs at most one head pointer;
//   - decrement() moves the node to the end of the run of nodes with the new
//     cost, located through the head pointer of its old cost.
// Costs above head_cap have no head pointer; a decrement there falls back to
// walking backward over the (rare) equal-cost run.
//
// Tie order within one cost value is insertion order: ascending vertex id
// after build, and a vertex decremented into a run joins it at the end.
// Single-writer; one instance belongs to one partition in one worker.
class CostIndex {
 public:
  static constexpr std::int32_t kDefaultHeadCap = 1024;

  CostIndex() = default;
  // Builds in O(n + max_cost) by counting sort; ties ordered by ascending id.
  explicit CostIndex(std::span<const std::int32_t> costs,
                     std::int32_t head_cap = kDefaultHeadCap);

  struct Entry {
    VertexId id;
    std::int32_t cost;
  };

  // Lowest-cost live vertex (first of the tie run), or nullopt when empty.
  std::optional<Entry> min() const;

  // Requires a live vertex with cost >= 1. Returns the new cost.
  std::int32_t decrement(VertexId u);

  // Tombstones and unlinks a live vertex.
  void remove(VertexId u);

  bool contains(VertexId u) const { return cost_[u] >= 0; }
  std::int32_t cost(VertexId u) const { return cost_[u]; }
  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  // Total pointer mutations since build; lets tests pin the amortized
  // O(m + |U|) work bound for m updates.
  std::uint64_t pointer_ops() const { return ops_; }

  // Full structural check for tests; throws std::logic_error on violation.
  void validate() const;

 private:
  static constexpr std::int32_t kNil = -1;
  static constexpr std::int32_t kTombstone = -1;

  void unlink(std::int32_t u);
  void link_before(std::int32_t u, std::int32_t pos);

  std::vector<std::int32_t> cost_;
  std::vector<std::int32_t> prev_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> heads_;  // heads_[c]: first node of the cost-c run, or kNil
  std::int32_t first_ = kNil;
  std::int32_t head_cap_ = kDefaultHeadCap;
  std::size_t live_ = 0;
  std::uint64_t ops_ = 0;
};

}  // namespace parsa
