#include <doctest.h>

#include <algorithm>

#include "parsa/oracle.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/rng.hpp"
#include "test_helpers.hpp"

using namespace parsa;

TEST_CASE("vertex_cost counts the new neighbors only") {
  const auto g = test_helpers::running_example();
  NeighborSets sets(1, g.num_v());
  CHECK(vertex_cost(g, 0, 0, sets) == 2);  // S empty
  sets.insert(0, 0);
  CHECK(vertex_cost(g, 0, 0, sets) == 1);  // one overlap
  sets.insert(0, 1);
  sets.insert(0, 2);
  CHECK(vertex_cost(g, 0, 0, sets) == 0);  // fully contained
}

TEST_CASE("partition_block: hand-traced running example") {
  const auto g = test_helpers::running_example();
  const auto block = test_helpers::whole_graph_block(g);
  NeighborSets sets(2, g.num_v());
  std::vector<std::uint64_t> sizes(2, 0);
  const auto res = partition_block(block, sets, BalanceRule::kNeighborSetSize, sizes);

  CHECK(res.assign == std::vector<PartitionId>{0, 0, 1, 1});
  CHECK(sets.sorted_members(0) == std::vector<VertexId>{0, 1});
  CHECK(sets.sorted_members(1) == std::vector<VertexId>{1, 2});
  CHECK(sizes == std::vector<std::uint64_t>{2, 2});
  CHECK(res.added[0] == std::vector<VertexId>{0, 1});
  CHECK(res.added[1] == std::vector<VertexId>{1, 2});
}

TEST_CASE("partition_block: k=1 gathers every non-isolated v") {
  const auto g = test_helpers::running_example();
  const auto block = test_helpers::whole_graph_block(g);
  NeighborSets sets(1, g.num_v());
  std::vector<std::uint64_t> sizes(1, 0);
  const auto res = partition_block(block, sets, BalanceRule::kNeighborSetSize, sizes);
  CHECK(std::all_of(res.assign.begin(), res.assign.end(), [](PartitionId p) { return p == 0; }));
  CHECK(sets.size(0) == 3);
}

TEST_CASE("partition_block: k=0 is rejected") {
  const auto g = test_helpers::running_example();
  const auto block = test_helpers::whole_graph_block(g);
  NeighborSets sets(0, g.num_v());
  std::vector<std::uint64_t> sizes;
  CHECK_THROWS_AS(partition_block(block, sets, BalanceRule::kNeighborSetSize, sizes),
                  std::invalid_argument);
}

namespace {

void check_block_equivalence(const BipartiteGraph& g, std::uint32_t k, BalanceRule rule,
                             SplitMix64& rng, bool seeded_sets) {
  const auto block = test_helpers::whole_graph_block(g);

  NeighborSets fast_sets(k, g.num_v());
  NeighborSets naive_sets(k, g.num_v());
  if (seeded_sets) {
    for (PartitionId i = 0; i < k; ++i) {
      const auto picks = rng.next_below(g.num_v() + 1);
      for (std::uint64_t t = 0; t < picks; ++t) {
        const auto v = static_cast<VertexId>(rng.next_below(g.num_v()));
        fast_sets.insert(i, v);
        naive_sets.insert(i, v);
      }
    }
  }

  std::vector<std::uint64_t> fast_sizes(k, 0), naive_sizes(k, 0);
  const auto fast = partition_block(block, fast_sets, rule, fast_sizes);
  const auto naive = naive_greedy(block, naive_sets, rule, naive_sizes);

  REQUIRE(fast.assign == naive.assign);
  REQUIRE(fast.added == naive.added);
  REQUIRE(fast_sizes == naive_sizes);
  for (PartitionId i = 0; i < k; ++i) {
    REQUIRE(fast_sets.size(i) == naive_sets.size(i));
    REQUIRE(fast_sets.sorted_members(i) == naive_sets.sorted_members(i));
  }
}

}  // namespace

TEST_CASE("property: partition_block matches the naive greedy oracle") {
  SplitMix64 rng(0x9A12);
  const std::uint32_t ks[] = {2, 4, 8};
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = test_helpers::random_graph(rng, 120, 90, 900);
    const auto k = ks[trial % 3];
    const auto rule =
        trial % 2 == 0 ? BalanceRule::kNeighborSetSize : BalanceRule::kPartitionSize;
    check_block_equivalence(g, k, rule, rng, trial % 5 == 0);
  }
}

TEST_CASE("run_sequential: a=0, b=1 equals one whole-graph block") {
  const auto g = test_helpers::running_example();
  GreedyConfig cfg;
  cfg.k = 2;
  cfg.a = 0;
  cfg.b = 1;
  cfg.seed = 99;
  const auto [up, sets] = run_sequential(g, cfg);

  const auto block = test_helpers::whole_graph_block(g);
  NeighborSets direct_sets(2, g.num_v());
  std::vector<std::uint64_t> sizes(2, 0);
  const auto direct = partition_block(block, direct_sets, cfg.balance_rule, sizes);
  CHECK(up.assign == direct.assign);
  for (PartitionId i = 0; i < 2; ++i)
    CHECK(sets.sorted_members(i) == direct_sets.sorted_members(i));
}

TEST_CASE("run_sequential: deterministic under a fixed seed") {
  SplitMix64 rng(0xD5);
  const auto g = test_helpers::random_graph(rng, 150, 100, 1200);
  GreedyConfig cfg;
  cfg.k = 4;
  cfg.a = 0;
  cfg.b = 3;
  cfg.seed = 31337;
  const auto [up1, s1] = run_sequential(g, cfg);
  const auto [up2, s2] = run_sequential(g, cfg);
  CHECK(up1.assign == up2.assign);
  CHECK(up1.sizes == up2.sizes);
}

TEST_CASE("run_sequential: neighbor-set soundness") {
  SplitMix64 rng(0x50F7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = test_helpers::random_graph(rng, 100, 60, 500);
    GreedyConfig cfg;
    cfg.k = 3;
    cfg.a = static_cast<std::uint32_t>(rng.next_below(3));
    cfg.b = static_cast<std::uint32_t>(1 + rng.next_below(std::min<VertexId>(g.num_u(), 6)));
    cfg.seed = rng.next();
    const auto [up, sets] = run_sequential(g, cfg);

    // Exact cover.
    std::vector<std::uint64_t> counts(cfg.k, 0);
    for (PartitionId p : up.assign) {
      REQUIRE(p < cfg.k);
      counts[p]++;
    }
    CHECK(counts == up.sizes);

    // Production from empty sets (a=0) yields S_i == N(U_i) exactly;
    // initialization passes seed the production sets, so S_i ⊇ N(U_i).
    const auto exact = neighbor_sets_of(g, up);
    for (PartitionId i = 0; i < cfg.k; ++i) {
      if (cfg.a == 0) {
        CHECK(sets.sorted_members(i) == exact.sorted_members(i));
      } else {
        for (VertexId v : exact.sorted_members(i)) CHECK(sets.contains(i, v));
      }
    }
  }
}

TEST_CASE("run_sequential: partition-size rule balances within one") {
  SplitMix64 rng(0xBA1A);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = test_helpers::random_graph(rng, 90, 70, 500);
    GreedyConfig cfg;
    cfg.k = 1 + static_cast<std::uint32_t>(rng.next_below(5));
    cfg.a = 0;
    cfg.b = 1;
    cfg.seed = rng.next();
    cfg.balance_rule = BalanceRule::kPartitionSize;
    const auto [up, sets] = run_sequential(g, cfg);
    const auto [mn, mx] = std::minmax_element(up.sizes.begin(), up.sizes.end());
    CHECK(*mx - *mn <= 1);
  }
}

TEST_CASE("monotone costs: no vertex cost ever rises during a block") {
  // Grow S one assignment at a time (any order works, S only grows) and
  // check every unassigned cost is non-increasing.
  SplitMix64 rng(0x3030);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = test_helpers::random_graph(rng, 60, 40, 300);
    const std::uint32_t k = 3;
    const auto block = test_helpers::whole_graph_block(g);
    NeighborSets sets(k, g.num_v());
    std::vector<std::uint64_t> sizes(k, 0);
    const auto res = partition_block(block, sets, BalanceRule::kNeighborSetSize, sizes);

    NeighborSets grow(k, g.num_v());
    std::vector<std::vector<std::int64_t>> last(k, std::vector<std::int64_t>(g.num_u()));
    for (PartitionId i = 0; i < k; ++i)
      for (VertexId u = 0; u < g.num_u(); ++u) last[i][u] = vertex_cost(g, u, i, grow);
    for (VertexId assigned = 0; assigned < g.num_u(); ++assigned) {
      const PartitionId p = res.assign[assigned];
      for (VertexId v : g.neighbors_of_u(assigned)) grow.insert(p, v);
      for (PartitionId i = 0; i < k; ++i) {
        for (VertexId u = 0; u < g.num_u(); ++u) {
          const auto c = vertex_cost(g, u, i, grow);
          CHECK(c <= last[i][u]);
          last[i][u] = c;
        }
      }
    }
  }
}
