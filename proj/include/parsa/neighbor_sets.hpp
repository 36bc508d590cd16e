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
#include <vector>

#include "parsa/bitset.hpp"
#include "parsa/types.hpp"

namespace parsa {

// The k shared neighbor sets S_i over V, with cached cardinalities.
//
// Built locally (empty or from explicit members) the size counters equal the
// stored cardinalities. Built from a scoped pull, membership covers only the
// pulled slice of V while the counters carry the server-reported totals,
// which is what the smallest-|S_j| balance rule needs.
class NeighborSets {
 public:
  NeighborSets() = default;
  NeighborSets(std::uint32_t k, VertexId num_v)
      : k_(k), num_v_(num_v), sets_(k, Bitset(num_v)), sizes_(k, 0) {}

  static NeighborSets from_members(std::uint32_t k, VertexId num_v,
                                   const std::vector<std::vector<VertexId>>& members) {
    NeighborSets s(k, num_v);
    for (std::uint32_t i = 0; i < k; ++i)
      for (VertexId v : members[i]) s.insert(i, v);
    return s;
  }

  static NeighborSets from_pull(std::uint32_t k, VertexId num_v,
                                const std::vector<std::vector<VertexId>>& scoped_members,
                                const std::vector<std::uint64_t>& totals) {
    NeighborSets s = from_members(k, num_v, scoped_members);
    s.sizes_ = totals;
    return s;
  }

  std::uint32_t parts() const { return k_; }
  VertexId universe() const { return num_v_; }

  bool contains(PartitionId i, VertexId v) const { return sets_[i].test(v); }

  // Returns true when v was newly added; bumps the size counter.
  bool insert(PartitionId i, VertexId v) {
    if (sets_[i].test(v)) return false;
    sets_[i].set(v);
    ++sizes_[i];
    return true;
  }

  std::uint64_t size(PartitionId i) const { return sizes_[i]; }

  // Replaces one set wholesale (individual-initialization reset semantics).
  void reset(PartitionId i, const std::vector<VertexId>& members) {
    sets_[i].clear();
    sizes_[i] = 0;
    for (VertexId v : members) insert(i, v);
  }

  std::vector<VertexId> sorted_members(PartitionId i) const {
    std::vector<VertexId> out;
    out.reserve(sizes_[i]);
    sets_[i].for_each([&](std::size_t v) { out.push_back(static_cast<VertexId>(v)); });
    return out;
  }

  const Bitset& bits(PartitionId i) const { return sets_[i]; }

 private:
  std::uint32_t k_ = 0;
  VertexId num_v_ = 0;
  std::vector<Bitset> sets_;
  std::vector<std::uint64_t> sizes_;
};

}  // namespace parsa
