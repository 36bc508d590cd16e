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
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "parsa/graph.hpp"
#include "parsa/neighbor_sets.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/types.hpp"

namespace parsa {

inline constexpr std::uint64_t kUnboundedDelay = std::numeric_limits<std::uint64_t>::max();

// Message a worker pushes after partitioning a block: per partition the v ids
// to merge into S_i (union), or the replacement contents while initializing.
// Sorted v-id arrays; one message fans out to every server shard.
struct PushMessage {
  std::uint32_t worker = 0;
  std::uint64_t seq = 0;  // per-worker, 1-based
  bool initializing = false;
  std::vector<std::vector<VertexId>> delta;
};

struct PullResult {
  // Per partition: S_i restricted to the requested scope (ascending ids).
  std::vector<std::vector<VertexId>> scoped;
  // Global |S_i| totals, needed for the smallest-|S_j| balance rule.
  std::vector<std::uint64_t> totals;
};

// The authoritative neighbor sets, sharded by contiguous v-id range across
// shard threads. Pushes are applied asynchronously in per-shard FIFO order;
// pulls read the applied state synchronously. A worker's pushes are
// acknowledged once every shard has applied them, which is what the bounded
// delay gate waits on.
class NeighborSetServer {
 public:
  NeighborSetServer(std::uint32_t k, VertexId num_v, std::uint32_t num_shards,
                    std::uint32_t num_workers, std::uint32_t apply_delay_us = 0);
  ~NeighborSetServer();

  NeighborSetServer(const NeighborSetServer&) = delete;
  NeighborSetServer& operator=(const NeighborSetServer&) = delete;

  // Installs initial sets (global initialization / incremental runs).
  // Must be called before any push.
  void seed(const NeighborSets& sets);

  // Asynchronous; returns this worker's 1-based push sequence number.
  std::uint64_t push(std::uint32_t worker, std::vector<std::vector<VertexId>> delta,
                     bool initializing);

  // Blocks until `worker`'s pushes with seq <= through are applied on every
  // shard. through == 0 returns immediately.
  void wait_acked(std::uint32_t worker, std::uint64_t through) const;
  std::uint64_t acked_through(std::uint32_t worker) const;

  // Scoped read of the applied state; snapshot-consistent per shard.
  PullResult pull(std::span<const VertexId> v_scope) const;

  // Applied-push count per worker, per shard (the server clocks).
  std::vector<std::vector<std::uint64_t>> shard_clocks() const;

  void flush() const;  // waits until every sent push is applied
  NeighborSets snapshot() const;

  std::uint32_t parts() const { return k_; }
  std::uint32_t num_shards() const;

 private:
  struct Impl;
  std::uint32_t k_;
  std::unique_ptr<Impl> impl_;
};

struct RuntimeOptions {
  std::uint32_t num_workers = 1;
  std::uint32_t server_shards = 1;
  std::uint64_t max_delay = kUnboundedDelay;  // tau
  bool prefetch = false;
  // Fraction of U to pre-partition on one worker, seeding every worker's
  // neighbor sets (global initialization). 0 disables.
  double global_init_fraction = 0.0;
  // Test hook: artificial per-message apply latency on the shards, widening
  // async windows. Leave 0 in production.
  std::uint32_t apply_delay_us = 0;

  void validate() const;
};

struct ParallelStats {
  std::uint64_t pulls = 0;
  std::uint64_t pushes = 0;
  // Per worker, the largest number of own unacknowledged pushes observed at
  // pull time; tau = 0 forces these to zero.
  std::vector<std::uint64_t> max_unacked_at_pull;
};

struct ParallelResult {
  UPartition partition;
  NeighborSets sets;
  ParallelStats stats;
};

// The full scheduler/server/worker pipeline: divide into cfg.b blocks,
// dispatch cfg.a initializing passes then cfg.b production passes round-robin
// over the workers. Worker block t waits until its own pushes through
// t - tau - 1 are acknowledged, pulls the scoped sets, partitions locally and
// pushes only the delta. A worker failure aborts the run.
ParallelResult run_parallel(const BipartiteGraph& g, const GreedyConfig& cfg,
                            const RuntimeOptions& opt,
                            const NeighborSets* initial_sets = nullptr);

}  // namespace parsa
