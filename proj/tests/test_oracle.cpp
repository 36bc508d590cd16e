#include <doctest.h>

#include <algorithm>

#include "parsa/oracle.hpp"
#include "parsa/reference.hpp"
#include "parsa/rng.hpp"
#include "test_helpers.hpp"

using namespace parsa;

TEST_CASE("exhaustive: running example optimum is 2") {
  // All 8 label-distinct 2-way assignments enumerated by hand give
  // min max_i |N(U_i)| = 2, e.g. {u0,u1} | {u2,u3}.
  const auto g = test_helpers::running_example();
  const auto res = exhaustive_partition(g, 2);
  CHECK(res.best_value == 2);
  // The returned assignment achieves its own value.
  std::vector<std::vector<VertexId>> members(2);
  for (VertexId u = 0; u < g.num_u(); ++u) members[res.best.assign[u]].push_back(u);
  const auto worst = std::max(neighbor_count(g, members[0]), neighbor_count(g, members[1]));
  CHECK(worst == res.best_value);
}

TEST_CASE("exhaustive: k=1 counts the non-isolated v") {
  const auto g = BipartiteGraph::from_adjacency(6, {{0, 1}, {0}, {1, 5}, {5}});
  const auto res = exhaustive_partition(g, 1);
  CHECK(res.best_value == 3);  // {v0, v1, v5}
}

TEST_CASE("exhaustive: k=|U| reaches the max degree") {
  const auto g = test_helpers::running_example();
  const auto res = exhaustive_partition(g, 4);
  CHECK(res.best_value == 2);  // max degree
}

TEST_CASE("exhaustive: size guard") {
  parsa::SplitMix64 rng(1);
  const auto g = test_helpers::random_graph(rng, 64, 8, 64);
  if (g.num_u() >= 25) CHECK_THROWS_AS(exhaustive_partition(g, 8), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_partition(test_helpers::running_example(), 0),
                  std::invalid_argument);
}

TEST_CASE("exhaustive lower-bounds the greedy on random instances") {
  SplitMix64 rng(0x0D0);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = test_helpers::random_graph(rng, 10, 12, 40);
    const std::uint32_t k = static_cast<std::uint32_t>(2 + rng.next_below(2));
    const auto oracle = exhaustive_partition(g, k);

    GreedyConfig cfg;
    cfg.k = k;
    cfg.a = 0;
    cfg.b = 1;
    cfg.seed = rng.next();
    const auto [up, sets] = run_sequential(g, cfg);
    std::uint64_t worst = 0;
    for (PartitionId i = 0; i < k; ++i) {
      std::vector<VertexId> members;
      for (VertexId u = 0; u < g.num_u(); ++u)
        if (up.assign[u] == i) members.push_back(u);
      worst = std::max(worst, neighbor_count(g, members));
    }
    CHECK(oracle.best_value <= worst);
  }
}

TEST_CASE("naive_greedy: empty block is a no-op") {
  const auto g = test_helpers::running_example();
  const auto block = make_block(g, {});
  NeighborSets sets(2, g.num_v());
  sets.insert(0, 1);
  std::vector<std::uint64_t> sizes(2, 0);
  const auto res = naive_greedy(block, sets, BalanceRule::kNeighborSetSize, sizes);
  CHECK(res.assign.empty());
  CHECK(sets.size(0) == 1);
  CHECK(sizes == std::vector<std::uint64_t>{0, 0});
}
