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

#include "parsa/runtime.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <functional>
#include <future>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "parsa/rng.hpp"

namespace parsa {

namespace {

// One shard: owns S_i membership for v in [lo, hi) and applies its slice of
// the push stream in FIFO order on its own thread.
class ServerShard {
 public:
  ServerShard(std::uint32_t k, VertexId lo, VertexId hi, std::uint32_t apply_delay_us)
      : k_(k), lo_(lo), hi_(hi), delay_us_(apply_delay_us),
        sets_(k, Bitset(hi > lo ? hi - lo : 0)), sizes_(k, 0) {}

  void start(std::function<void(std::uint32_t)> on_applied) {
    on_applied_ = std::move(on_applied);
    thread_ = std::thread([this] { run(); });
  }

  void stop() {
    {
      std::lock_guard lk(queue_mu_);
      stopping_ = true;
    }
    queue_cv_.notify_all();
    if (thread_.joinable()) thread_.join();
  }

  void enqueue(std::shared_ptr<const PushMessage> msg) {
    {
      std::lock_guard lk(queue_mu_);
      queue_.push_back(std::move(msg));
    }
    queue_cv_.notify_one();
  }

  void seed(const NeighborSets& sets) {
    std::lock_guard lk(state_mu_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      sets.bits(i).for_each([&](std::size_t v) {
        if (v >= lo_ && v < hi_) set_bit(i, static_cast<VertexId>(v));
      });
    }
  }

  void pull_into(std::span<const VertexId> scope, PullResult& out) const {
    std::lock_guard lk(state_mu_);
    auto begin = std::lower_bound(scope.begin(), scope.end(), lo_);
    auto end = std::lower_bound(scope.begin(), scope.end(), hi_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (auto it = begin; it != end; ++it)
        if (sets_[i].test(*it - lo_)) out.scoped[i].push_back(*it);
      out.totals[i] += sizes_[i];
    }
  }

  void snapshot_into(NeighborSets& out) const {
    std::lock_guard lk(state_mu_);
    for (std::uint32_t i = 0; i < k_; ++i)
      sets_[i].for_each([&](std::size_t v) {
        out.insert(i, static_cast<VertexId>(v + lo_));
      });
  }

 private:
  void set_bit(std::uint32_t i, VertexId global_v) {
    const VertexId local = global_v - lo_;
    if (!sets_[i].test(local)) {
      sets_[i].set(local);
      ++sizes_[i];
    }
  }

  void apply(const PushMessage& msg) {
    std::lock_guard lk(state_mu_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (msg.initializing) {
        sets_[i].clear();
        sizes_[i] = 0;
      }
      for (VertexId v : msg.delta[i])
        if (v >= lo_ && v < hi_) set_bit(i, v);
    }
  }

  void run() {
    for (;;) {
      std::shared_ptr<const PushMessage> msg;
      {
        std::unique_lock lk(queue_mu_);
        queue_cv_.wait(lk, [&] { return stopping_ || !queue_.empty(); });
        if (queue_.empty()) return;  // stopping and drained
        msg = std::move(queue_.front());
        queue_.pop_front();
      }
      if (delay_us_ > 0)
        std::this_thread::sleep_for(std::chrono::microseconds(delay_us_));
      apply(*msg);
      on_applied_(msg->worker);
    }
  }

  const std::uint32_t k_;
  const VertexId lo_, hi_;
  const std::uint32_t delay_us_;

  mutable std::mutex state_mu_;
  std::vector<Bitset> sets_;
  std::vector<std::uint64_t> sizes_;

  std::mutex queue_mu_;
  std::condition_variable queue_cv_;
  std::deque<std::shared_ptr<const PushMessage>> queue_;
  bool stopping_ = false;

  std::function<void(std::uint32_t)> on_applied_;
  std::thread thread_;
};

}  // namespace

struct NeighborSetServer::Impl {
  VertexId num_v = 0;
  std::uint32_t num_workers = 0;
  std::vector<std::unique_ptr<ServerShard>> shards;

  // Ack board: applied[s][w] counts worker w's pushes applied by shard s.
  mutable std::mutex ack_mu;
  mutable std::condition_variable ack_cv;
  std::vector<std::vector<std::uint64_t>> applied;
  std::vector<std::uint64_t> sent;

  std::uint64_t min_applied(std::uint32_t worker) const {
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (const auto& per_shard : applied) m = std::min(m, per_shard[worker]);
    return m;
  }
};

NeighborSetServer::NeighborSetServer(std::uint32_t k, VertexId num_v, std::uint32_t num_shards,
                                     std::uint32_t num_workers, std::uint32_t apply_delay_us)
    : k_(k), impl_(std::make_unique<Impl>()) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (num_shards == 0) throw std::invalid_argument("need at least one server shard");
  impl_->num_v = num_v;
  impl_->num_workers = num_workers;
  impl_->applied.assign(num_shards, std::vector<std::uint64_t>(num_workers, 0));
  impl_->sent.assign(num_workers, 0);

  const VertexId chunk = num_shards == 0 ? 0 : (num_v + num_shards - 1) / num_shards;
  for (std::uint32_t s = 0; s < num_shards; ++s) {
    const VertexId lo = std::min<VertexId>(num_v, s * chunk);
    const VertexId hi = std::min<VertexId>(num_v, (s + 1) * chunk);
    impl_->shards.push_back(std::make_unique<ServerShard>(k, lo, hi, apply_delay_us));
  }
  for (std::uint32_t s = 0; s < num_shards; ++s) {
    impl_->shards[s]->start([this, s](std::uint32_t worker) {
      {
        std::lock_guard lk(impl_->ack_mu);
        impl_->applied[s][worker]++;
      }
      impl_->ack_cv.notify_all();
    });
  }
}

NeighborSetServer::~NeighborSetServer() {
  for (auto& shard : impl_->shards) shard->stop();
}

void NeighborSetServer::seed(const NeighborSets& sets) {
  if (sets.parts() != k_ || sets.universe() != impl_->num_v)
    throw std::invalid_argument("seed sets shape mismatch");
  for (auto& shard : impl_->shards) shard->seed(sets);
}

std::uint64_t NeighborSetServer::push(std::uint32_t worker,
                                      std::vector<std::vector<VertexId>> delta,
                                      bool initializing) {
  if (delta.size() != k_) throw std::invalid_argument("push delta must have k entries");
  auto msg = std::make_shared<PushMessage>();
  msg->worker = worker;
  msg->initializing = initializing;
  msg->delta = std::move(delta);
  std::uint64_t seq;
  {
    std::lock_guard lk(impl_->ack_mu);
    seq = ++impl_->sent[worker];
  }
  msg->seq = seq;
  for (auto& shard : impl_->shards) shard->enqueue(msg);
  return seq;
}

void NeighborSetServer::wait_acked(std::uint32_t worker, std::uint64_t through) const {
  if (through == 0) return;
  std::unique_lock lk(impl_->ack_mu);
  impl_->ack_cv.wait(lk, [&] { return impl_->min_applied(worker) >= through; });
}

std::uint64_t NeighborSetServer::acked_through(std::uint32_t worker) const {
  std::lock_guard lk(impl_->ack_mu);
  return impl_->min_applied(worker);
}

PullResult NeighborSetServer::pull(std::span<const VertexId> v_scope) const {
  PullResult out;
  out.scoped.assign(k_, {});
  out.totals.assign(k_, 0);
  // Shards own ascending disjoint ranges, so per-shard appends stay sorted.
  for (const auto& shard : impl_->shards) shard->pull_into(v_scope, out);
  return out;
}

std::vector<std::vector<std::uint64_t>> NeighborSetServer::shard_clocks() const {
  std::lock_guard lk(impl_->ack_mu);
  return impl_->applied;
}

void NeighborSetServer::flush() const {
  std::unique_lock lk(impl_->ack_mu);
  impl_->ack_cv.wait(lk, [&] {
    for (std::uint32_t w = 0; w < impl_->num_workers; ++w)
      if (impl_->min_applied(w) < impl_->sent[w]) return false;
    return true;
  });
}

NeighborSets NeighborSetServer::snapshot() const {
  NeighborSets out(k_, impl_->num_v);
  for (const auto& shard : impl_->shards) shard->snapshot_into(out);
  return out;
}

std::uint32_t NeighborSetServer::num_shards() const {
  return static_cast<std::uint32_t>(impl_->shards.size());
}

void RuntimeOptions::validate() const {
  if (num_workers < 1) throw std::invalid_argument("need at least one worker");
  if (server_shards < 1) throw std::invalid_argument("need at least one server shard");
  if (global_init_fraction < 0.0 || global_init_fraction > 1.0)
    throw std::invalid_argument("global init fraction must be in [0, 1]");
}

namespace {

struct WorkerOutput {
  std::vector<std::pair<VertexId, PartitionId>> assignments;
  std::vector<std::uint64_t> part_sizes;
  std::uint64_t pulls = 0;
  std::uint64_t pushes = 0;
  std::uint64_t max_unacked_at_pull = 0;
  std::exception_ptr error;
};

// One worker executing one task (an initializing or production pass).
void worker_task(std::uint32_t w, const SubgraphDivision& division, VertexId num_v,
                 const GreedyConfig& cfg, const RuntimeOptions& opt, std::uint32_t pass_count,
                 bool initializing, std::uint64_t base_seq, NeighborSetServer& server,
                 WorkerOutput& out) {
  try {
    std::vector<std::uint32_t> my_blocks;
    for (std::uint32_t p = w; p < pass_count; p += opt.num_workers)
      my_blocks.push_back(initializing ? p % cfg.b : p);

    std::future<SubgraphBlock> pending;
    std::uint32_t pending_block = std::numeric_limits<std::uint32_t>::max();
    auto fetch = [&](std::size_t idx) {
      SubgraphBlock blk = (opt.prefetch && pending.valid() && pending_block == my_blocks[idx])
                              ? pending.get()
                              : division.block(my_blocks[idx]);
      if (opt.prefetch && idx + 1 < my_blocks.size()) {
        pending_block = my_blocks[idx + 1];
        pending = std::async(std::launch::async,
                             [&division, j = pending_block] { return division.block(j); });
      }
      return blk;
    };

    std::vector<std::uint64_t> init_sizes(cfg.k, 0);
    for (std::size_t idx = 0; idx < my_blocks.size(); ++idx) {
      const std::uint64_t t = idx + 1;
      SubgraphBlock block = fetch(idx);

      // Bounded delay: block t may start only once this worker's pushes
      // through t - tau - 1 are applied.
      if (opt.max_delay != kUnboundedDelay && t > opt.max_delay + 1)
        server.wait_acked(w, base_seq + (t - opt.max_delay - 1));

      const std::uint64_t sent = base_seq + (t - 1);
      const std::uint64_t acked = server.acked_through(w);
      out.max_unacked_at_pull = std::max(out.max_unacked_at_pull, sent - std::min(sent, acked));

      PullResult pulled = server.pull(block.v_global);
      ++out.pulls;
      NeighborSets sets = NeighborSets::from_pull(cfg.k, num_v, pulled.scoped, pulled.totals);
      std::vector<std::uint64_t>& sizes = initializing ? init_sizes : out.part_sizes;
      if (initializing) std::fill(init_sizes.begin(), init_sizes.end(), 0);

      BlockPartitionResult res =
          partition_block(block, sets, cfg.balance_rule, sizes, cfg.head_cap);

      std::vector<std::vector<VertexId>> delta =
          initializing ? block_neighbor_sets(block, res.assign, cfg.k) : std::move(res.added);
      server.push(w, std::move(delta), initializing);
      ++out.pushes;

      if (!initializing)
        for (std::size_t lu = 0; lu < block.u_ids.size(); ++lu)
          out.assignments.emplace_back(block.u_ids[lu], res.assign[lu]);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
}

}  // namespace

ParallelResult run_parallel(const BipartiteGraph& g, const GreedyConfig& cfg,
                            const RuntimeOptions& opt, const NeighborSets* initial_sets) {
  cfg.validate();
  opt.validate();

  NeighborSets start = initial_sets ? *initial_sets : NeighborSets(cfg.k, g.num_v());
  if (start.parts() != cfg.k || start.universe() != g.num_v())
    throw std::invalid_argument("initial sets shape mismatch");

  ParallelResult result;
  result.stats.max_unacked_at_pull.assign(opt.num_workers, 0);
  if (g.num_u() == 0) {
    result.partition = UPartition::from_assignment(cfg.k, {});
    result.sets = std::move(start);
    return result;
  }

  // Global initialization: one worker partitions a seeded sample first and
  // its resulting neighbor sets seed everyone.
  if (opt.global_init_fraction > 0.0) {
    const auto want = static_cast<std::size_t>(
        std::max<double>(1.0, opt.global_init_fraction * g.num_u()));
    std::vector<VertexId> all(g.num_u());
    for (VertexId u = 0; u < g.num_u(); ++u) all[u] = u;
    SplitMix64 rng(derive_seed(cfg.seed, 0x9049));
    fisher_yates_shuffle(all, rng);
    all.resize(std::min(want, all.size()));
    SubgraphBlock sample = make_block(g, std::move(all));
    std::vector<std::uint64_t> sizes(cfg.k, 0);
    partition_block(sample, start, cfg.balance_rule, sizes, cfg.head_cap);
  }

  SubgraphDivision division(g, cfg.b, cfg.seed);
  NeighborSetServer server(cfg.k, g.num_v(), opt.server_shards, opt.num_workers,
                           opt.apply_delay_us);
  server.seed(start);

  std::vector<WorkerOutput> outputs(opt.num_workers);
  for (auto& o : outputs) o.part_sizes.assign(cfg.k, 0);
  std::vector<std::uint64_t> base_seq(opt.num_workers, 0);

  auto run_phase = [&](std::uint32_t pass_count, bool initializing) {
    std::vector<std::thread> threads;
    threads.reserve(opt.num_workers);
    for (std::uint32_t w = 0; w < opt.num_workers; ++w) {
      threads.emplace_back(worker_task, w, std::cref(division), g.num_v(), std::cref(cfg),
                           std::cref(opt), pass_count, initializing, base_seq[w],
                           std::ref(server), std::ref(outputs[w]));
    }
    for (auto& t : threads) t.join();
    for (std::uint32_t w = 0; w < opt.num_workers; ++w) {
      if (outputs[w].error) {
        try {
          std::rethrow_exception(outputs[w].error);
        } catch (const std::exception& e) {
          throw std::runtime_error("worker " + std::to_string(w) + " failed: " + e.what());
        }
      }
      base_seq[w] = outputs[w].pushes;
    }
    server.flush();  // barrier between the initializing and production tasks
  };

  if (cfg.a > 0) run_phase(cfg.a, /*initializing=*/true);
  run_phase(cfg.b, /*initializing=*/false);

  std::vector<PartitionId> assign(g.num_u(), kUnassigned);
  for (auto& o : outputs) {
    for (auto [u, p] : o.assignments) assign[u] = p;
    result.stats.pulls += o.pulls;
    result.stats.pushes += o.pushes;
  }
  for (std::uint32_t w = 0; w < opt.num_workers; ++w)
    result.stats.max_unacked_at_pull[w] = outputs[w].max_unacked_at_pull;

  result.partition = UPartition::from_assignment(cfg.k, std::move(assign));
  result.sets = server.snapshot();
  return result;
}

}  // namespace parsa
