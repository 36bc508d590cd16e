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

#include "parsa/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "parsa/bitset.hpp"
#include "parsa/rng.hpp"

namespace parsa {

std::uint64_t neighbor_count(const BipartiteGraph& g, std::span<const VertexId> us) {
  Bitset seen(g.num_v());
  for (VertexId u : us)
    for (VertexId v : g.neighbors_of_u(u)) seen.set(v);
  return seen.count();
}

namespace {

struct RoundChoice {
  double value = 0.0;
  std::vector<VertexId> subset;

  bool better_than(const RoundChoice& o) const {
    if (value != o.value) return value < o.value;
    if (subset.size() != o.subset.size()) return subset.size() < o.subset.size();
    return subset < o.subset;
  }
};

std::uint64_t union_neighbor_count(const BipartiteGraph& g, std::span<const VertexId> a,
                                   std::span<const VertexId> b) {
  Bitset seen(g.num_v());
  for (VertexId u : a)
    for (VertexId v : g.neighbors_of_u(u)) seen.set(v);
  for (VertexId u : b)
    for (VertexId v : g.neighbors_of_u(u)) seen.set(v);
  return seen.count();
}

}  // namespace

std::vector<VertexId> reference_round(const BipartiteGraph& g,
                                      std::span<const VertexId> candidates,
                                      std::span<const VertexId> current_members, double alpha) {
  if (candidates.size() > 20)
    throw std::invalid_argument("candidate set too large for exhaustive round");

  Bitset base(g.num_v());
  for (VertexId u : current_members)
    for (VertexId v : g.neighbors_of_u(u)) base.set(v);
  const std::size_t member_count = current_members.size();

  std::vector<VertexId> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());

  RoundChoice best;
  best.value = static_cast<double>(base.count()) - alpha * static_cast<double>(member_count);

  const std::uint32_t m = static_cast<std::uint32_t>(sorted.size());
  Bitset scratch(g.num_v());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    scratch = base;
    RoundChoice cand;
    for (std::uint32_t bit = 0; bit < m; ++bit) {
      if (!(mask >> bit & 1)) continue;
      cand.subset.push_back(sorted[bit]);
      for (VertexId v : g.neighbors_of_u(sorted[bit])) scratch.set(v);
    }
    cand.value = static_cast<double>(scratch.count()) -
                 alpha * static_cast<double>(member_count + cand.subset.size());
    if (cand.better_than(best)) best = std::move(cand);
  }
  return best.subset;
}

ReferenceResult run_reference(const BipartiteGraph& g, const ReferenceConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  if (g.num_u() > 20) throw std::invalid_argument("reference path is limited to |U| <= 20");

  const double n = static_cast<double>(g.num_u());
  const double residue_cap = static_cast<double>(cfg.k) * cfg.theta_residue;

  std::vector<std::vector<VertexId>> parts(cfg.k);
  std::vector<bool> assigned(g.num_u(), false);
  std::size_t remaining = g.num_u();
  SplitMix64 rng(cfg.seed);

  ReferenceResult result;
  for (std::uint64_t t = 0; t < cfg.max_iters; ++t) {
    if (static_cast<double>(remaining) <= residue_cap) break;
    ++result.iterations;

    PartitionId i = 0;
    for (PartitionId j = 1; j < cfg.k; ++j)
      if (parts[j].size() < parts[i].size()) i = j;

    const double p = std::min(1.0, n / (static_cast<double>(remaining) * cfg.k));
    std::vector<VertexId> sample;
    for (VertexId u = 0; u < g.num_u(); ++u)
      if (!assigned[u] && rng.next_bernoulli(p)) sample.push_back(u);
    if (static_cast<double>(sample.size()) > 2.0 * n / cfg.k) continue;
    if (sample.empty()) continue;

    std::vector<VertexId> chosen = reference_round(g, sample, parts[i], cfg.alpha);
    const double g_value =
        static_cast<double>(union_neighbor_count(g, parts[i], chosen)) -
        cfg.alpha * static_cast<double>(parts[i].size() + chosen.size());
    if (g_value <= 0.0 && !chosen.empty()) {
      ++result.commits;
      for (VertexId u : chosen) {
        parts[i].push_back(u);
        assigned[u] = true;
      }
      remaining -= chosen.size();
    }
  }

  if (static_cast<double>(remaining) > residue_cap) {
    result.success = false;
    return result;
  }

  // Spread the residue evenly: ascending id, each to the smallest partition.
  for (VertexId u = 0; u < g.num_u(); ++u) {
    if (assigned[u]) continue;
    PartitionId i = 0;
    for (PartitionId j = 1; j < cfg.k; ++j)
      if (parts[j].size() < parts[i].size()) i = j;
    parts[i].push_back(u);
  }

  std::vector<PartitionId> assign(g.num_u(), kUnassigned);
  for (PartitionId i = 0; i < cfg.k; ++i)
    for (VertexId u : parts[i]) assign[u] = i;
  result.partition = UPartition::from_assignment(cfg.k, std::move(assign));
  result.success = true;
  return result;
}

}  // namespace parsa
