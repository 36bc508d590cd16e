#include <doctest.h>

#include <algorithm>

#include "parsa/metrics.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/partition_v.hpp"
#include "parsa/rng.hpp"
#include "test_helpers.hpp"

using namespace parsa;

namespace {

std::uint64_t objective_max(const BipartiteGraph& g, const UPartition& up, const VPartition& vp) {
  return evaluate(g, up, vp).t_max;
}

UPartition running_example_up() {
  return UPartition::from_assignment(2, {0, 0, 1, 1});
}

}  // namespace

TEST_CASE("sweep: hand-traced running example") {
  // N(U_0) = {v0,v1}, N(U_1) = {v1,v2}. v0 forced to 0 (cost 2->1); v1 tie
  // broken to machine 0 (cost 1 vs 2, ends 1-1+1=1); v2 forced to 1 (2->1).
  const auto g = test_helpers::running_example();
  const auto up = running_example_up();
  const auto sets = neighbor_sets_of(g, up);
  const auto vp = sweep(g, sets);
  CHECK(vp.assign == std::vector<PartitionId>{0, 0, 1});
  CHECK(vp.sizes == std::vector<std::uint64_t>{2, 1});
  CHECK(vp.isolated_count == 0);
}

TEST_CASE("sweep: k=1 takes everything") {
  const auto g = test_helpers::running_example();
  const auto up = UPartition::from_assignment(1, {0, 0, 0, 0});
  const auto vp = sweep(g, neighbor_sets_of(g, up));
  CHECK(std::all_of(vp.assign.begin(), vp.assign.end(), [](PartitionId p) { return p == 0; }));
}

TEST_CASE("sweep: disjoint neighbor sets mean zero traffic") {
  // u0,u1 -> {v0,v1}; u2,u3 -> {v2,v3}; no shared v.
  const auto g = BipartiteGraph::from_adjacency(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
  const auto up = UPartition::from_assignment(2, {0, 0, 1, 1});
  const auto vp = sweep(g, neighbor_sets_of(g, up));
  CHECK(vp.assign == std::vector<PartitionId>{0, 0, 1, 1});
  const auto rep = evaluate(g, up, vp);
  CHECK(rep.t_max == 0);
  CHECK(rep.t_sum == 0);
}

TEST_CASE("sweep: isolated v falls back to round robin and is counted") {
  // v3 and v4 have no edges.
  const auto g = BipartiteGraph::from_adjacency(5, {{0, 1}, {0}, {1, 2}, {2}});
  const auto up = running_example_up();
  const auto vp = sweep(g, neighbor_sets_of(g, up));
  CHECK(vp.isolated_count == 2);
  CHECK(vp.assign[3] == 0);
  CHECK(vp.assign[4] == 1);
  // Every non-isolated v sits on a machine that needs it.
  const auto sets = neighbor_sets_of(g, up);
  for (VertexId v = 0; v < 3; ++v) CHECK(sets.contains(vp.assign[v], v));
}

TEST_CASE("sweep_to_convergence: running example is a fixed point of itself") {
  const auto g = test_helpers::running_example();
  const auto sets = neighbor_sets_of(g, running_example_up());
  const auto [vp, sweeps] = sweep_to_convergence(g, sets, 8);
  CHECK(sweeps <= 2);
  CHECK(vp.assign == std::vector<PartitionId>{0, 0, 1});
}

TEST_CASE("sweep_to_convergence: already-converged prior returns after one sweep") {
  const auto g = test_helpers::running_example();
  const auto sets = neighbor_sets_of(g, running_example_up());
  const auto first = sweep(g, sets);
  const auto [vp, sweeps] = sweep_to_convergence(g, sets, 8, &first);
  CHECK(sweeps == 1);
  CHECK(vp.assign == first.assign);
}

TEST_CASE("sweep_to_convergence: max_sweeps must be positive") {
  const auto g = test_helpers::running_example();
  const auto sets = neighbor_sets_of(g, running_example_up());
  CHECK_THROWS_AS(sweep_to_convergence(g, sets, 0), std::invalid_argument);
}

TEST_CASE("property: objective monotone and single-move local optimality") {
  SplitMix64 rng(0x5EEB);
  int converged_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // |V| <= 12, k <= 3, random U assignment.
    const auto nv = static_cast<VertexId>(1 + rng.next_below(12));
    const auto nu = static_cast<VertexId>(2 + rng.next_below(9));
    std::vector<std::pair<VertexId, VertexId>> edges;
    const auto ne = 1 + rng.next_below(3 * nv);
    for (std::uint64_t e = 0; e < ne; ++e)
      edges.emplace_back(static_cast<VertexId>(rng.next_below(nu)),
                         static_cast<VertexId>(rng.next_below(nv)));
    const auto g = BipartiteGraph::from_edges(nu, nv, std::move(edges));
    const auto k = static_cast<std::uint32_t>(1 + rng.next_below(3));
    std::vector<PartitionId> ua(nu);
    for (auto& p : ua) p = static_cast<PartitionId>(rng.next_below(k));
    const auto up = UPartition::from_assignment(k, std::move(ua));
    const auto sets = neighbor_sets_of(g, up);

    // Objective never increases between consecutive sweeps.
    VPartition cur = sweep(g, sets);
    std::uint64_t obj = objective_max(g, up, cur);
    bool converged = false;
    for (int s = 0; s < 12; ++s) {
      VPartition next = sweep(g, sets, &cur);
      const auto next_obj = objective_max(g, up, next);
      CHECK(next_obj <= obj);
      if (next.assign == cur.assign) {
        converged = true;
        break;
      }
      cur = std::move(next);
      obj = next_obj;
    }

    if (!converged) continue;
    ++converged_count;

    // No single feasible move of one v lowers the maximum.
    const std::uint64_t base = objective_max(g, up, cur);
    for (VertexId v = 0; v < nv; ++v) {
      if (g.degree_v(v) == 0) continue;
      const PartitionId old = cur.assign[v];
      for (PartitionId i = 0; i < k; ++i) {
        if (i == old || !sets.contains(i, v)) continue;
        VPartition moved = cur;
        moved.assign[v] = i;
        moved.sizes[old]--;
        moved.sizes[i]++;
        CHECK(objective_max(g, up, moved) >= base);
      }
    }
  }
  CHECK(converged_count >= 50);
}
