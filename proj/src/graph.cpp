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

#include "parsa/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parsa/rng.hpp"

namespace parsa {

const char* to_string(BalanceRule rule) {
  return rule == BalanceRule::kNeighborSetSize ? "neighbor-set-size" : "partition-size";
}

BalanceRule balance_rule_from_string(const char* name) {
  std::string s(name);
  if (s == "neighbor-set-size") return BalanceRule::kNeighborSetSize;
  if (s == "partition-size") return BalanceRule::kPartitionSize;
  throw std::invalid_argument("unknown balance rule: " + s);
}

BipartiteGraph BipartiteGraph::from_edges(VertexId num_u, VertexId num_v,
                                          std::vector<std::pair<VertexId, VertexId>> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= num_u || v >= num_v) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  BipartiteGraph g;
  g.num_u_ = num_u;
  g.num_v_ = num_v;
  g.u_offsets_.assign(num_u + 1, 0);
  g.u_adj_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    g.u_offsets_[u + 1]++;
    g.u_adj_.push_back(v);
  }
  for (VertexId u = 0; u < num_u; ++u) g.u_offsets_[u + 1] += g.u_offsets_[u];
  g.build_transpose();
  return g;
}

BipartiteGraph BipartiteGraph::from_adjacency(VertexId num_v,
                                              std::vector<std::vector<VertexId>> adj_u) {
  BipartiteGraph g;
  g.num_u_ = static_cast<VertexId>(adj_u.size());
  g.num_v_ = num_v;
  g.u_offsets_.assign(adj_u.size() + 1, 0);
  for (std::size_t u = 0; u < adj_u.size(); ++u) {
    const auto& nbrs = adj_u[u];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= num_v) throw std::invalid_argument("neighbor id out of range");
      if (i > 0 && nbrs[i] <= nbrs[i - 1])
        throw std::invalid_argument("neighbor list not strictly increasing");
    }
    g.u_offsets_[u + 1] = g.u_offsets_[u] + nbrs.size();
    g.u_adj_.insert(g.u_adj_.end(), nbrs.begin(), nbrs.end());
  }
  g.build_transpose();
  return g;
}

void BipartiteGraph::build_transpose() {
  v_offsets_.assign(num_v_ + 1, 0);
  for (VertexId v : u_adj_) v_offsets_[v + 1]++;
  for (VertexId v = 0; v < num_v_; ++v) v_offsets_[v + 1] += v_offsets_[v];
  v_adj_.resize(u_adj_.size());
  std::vector<EdgeCount> cursor(v_offsets_.begin(), v_offsets_.end() - 1);
  for (VertexId u = 0; u < num_u_; ++u) {
    for (VertexId v : neighbors_of_u(u)) v_adj_[cursor[v]++] = u;
  }
}

void BipartiteGraph::validate() const {
  EdgeCount total_u = 0, total_v = 0;
  for (VertexId u = 0; u < num_u_; ++u) {
    auto nbrs = neighbors_of_u(u);
    total_u += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= num_v_) throw std::logic_error("u adjacency id out of range");
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) throw std::logic_error("u adjacency not sorted");
    }
  }
  for (VertexId v = 0; v < num_v_; ++v) {
    auto nbrs = neighbors_of_v(v);
    total_v += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= num_u_) throw std::logic_error("v adjacency id out of range");
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) throw std::logic_error("v adjacency not sorted");
      auto un = neighbors_of_u(nbrs[i]);
      if (!std::binary_search(un.begin(), un.end(), v))
        throw std::logic_error("transpose mismatch");
    }
  }
  if (total_u != num_edges() || total_v != num_edges())
    throw std::logic_error("edge count mismatch");
}

SubgraphDivision::SubgraphDivision(const BipartiteGraph& g, std::uint32_t num_blocks,
                                   std::uint64_t seed)
    : g_(&g), num_blocks_(num_blocks) {
  const VertexId n = g.num_u();
  if (num_blocks == 0 || num_blocks > n)
    throw std::invalid_argument("block count must satisfy 1 <= b <= |U|");
  order_.resize(n);
  for (VertexId u = 0; u < n; ++u) order_[u] = u;
  SplitMix64 rng(seed);
  fisher_yates_shuffle(order_, rng);

  // Chunk sizes differ by at most one; the first (n mod b) chunks take the
  // extra vertex. Each chunk is sorted so block-local order is id order.
  bounds_.assign(num_blocks + 1, 0);
  const std::size_t base = n / num_blocks;
  const std::size_t extra = n % num_blocks;
  for (std::uint32_t j = 0; j < num_blocks; ++j)
    bounds_[j + 1] = bounds_[j] + base + (j < extra ? 1 : 0);
  for (std::uint32_t j = 0; j < num_blocks; ++j)
    std::sort(order_.begin() + bounds_[j], order_.begin() + bounds_[j + 1]);
}

std::span<const VertexId> SubgraphDivision::block_u_ids(std::uint32_t j) const {
  return {order_.data() + bounds_[j], order_.data() + bounds_[j + 1]};
}

SubgraphBlock SubgraphDivision::block(std::uint32_t j) const {
  auto ids = block_u_ids(j);
  return make_block(*g_, std::vector<VertexId>(ids.begin(), ids.end()), j);
}

std::vector<SubgraphBlock> divide_into_subgraphs(const BipartiteGraph& g, std::uint32_t num_blocks,
                                                 std::uint64_t seed) {
  SubgraphDivision division(g, num_blocks, seed);
  std::vector<SubgraphBlock> blocks;
  blocks.reserve(num_blocks);
  for (std::uint32_t j = 0; j < num_blocks; ++j) blocks.push_back(division.block(j));
  return blocks;
}

SubgraphBlock make_block(const BipartiteGraph& g, std::vector<VertexId> u_ids,
                         std::uint32_t block_id) {
  std::sort(u_ids.begin(), u_ids.end());

  SubgraphBlock blk;
  blk.block_id = block_id;
  blk.u_ids = std::move(u_ids);

  std::vector<VertexId> vs;
  for (VertexId u : blk.u_ids) {
    auto nbrs = g.neighbors_of_u(u);
    vs.insert(vs.end(), nbrs.begin(), nbrs.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  blk.v_global = std::move(vs);

  std::vector<std::vector<VertexId>> local_adj(blk.u_ids.size());
  for (std::size_t lu = 0; lu < blk.u_ids.size(); ++lu) {
    auto nbrs = g.neighbors_of_u(blk.u_ids[lu]);
    local_adj[lu].reserve(nbrs.size());
    for (VertexId v : nbrs) {
      auto it = std::lower_bound(blk.v_global.begin(), blk.v_global.end(), v);
      local_adj[lu].push_back(static_cast<VertexId>(it - blk.v_global.begin()));
    }
  }
  blk.local = BipartiteGraph::from_adjacency(static_cast<VertexId>(blk.v_global.size()),
                                             std::move(local_adj));
  return blk;
}

}  // namespace parsa
