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

#include "parsa/cost_index.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace parsa {

CostIndex::CostIndex(std::span<const std::int32_t> costs, std::int32_t head_cap)
    : head_cap_(head_cap) {
  if (head_cap_ < 0) throw std::invalid_argument("head cap must be >= 0");
  const std::size_t n = costs.size();
  cost_.assign(costs.begin(), costs.end());
  prev_.assign(n, kNil);
  next_.assign(n, kNil);
  heads_.assign(static_cast<std::size_t>(head_cap_) + 1, kNil);
  live_ = n;
  if (n == 0) return;

  std::int32_t max_cost = 0;
  for (std::int32_t c : costs) {
    if (c < 0) throw std::invalid_argument("costs must be non-negative");
    max_cost = std::max(max_cost, c);
  }

  // Counting sort, stable in id order.
  std::vector<std::int32_t> bucket_head(static_cast<std::size_t>(max_cost) + 1, kNil);
  std::vector<std::int32_t> bucket_tail(static_cast<std::size_t>(max_cost) + 1, kNil);
  for (std::size_t u = 0; u < n; ++u) {
    const std::int32_t c = cost_[u];
    if (bucket_head[c] == kNil) {
      bucket_head[c] = bucket_tail[c] = static_cast<std::int32_t>(u);
    } else {
      next_[bucket_tail[c]] = static_cast<std::int32_t>(u);
      prev_[u] = bucket_tail[c];
      bucket_tail[c] = static_cast<std::int32_t>(u);
    }
  }
  std::int32_t tail = kNil;
  for (std::int32_t c = 0; c <= max_cost; ++c) {
    if (bucket_head[c] == kNil) continue;
    if (c <= head_cap_) heads_[c] = bucket_head[c];
    if (first_ == kNil) {
      first_ = bucket_head[c];
    } else {
      next_[tail] = bucket_head[c];
      prev_[bucket_head[c]] = tail;
    }
    tail = bucket_tail[c];
  }
}

std::optional<CostIndex::Entry> CostIndex::min() const {
  if (first_ == kNil) return std::nullopt;
  return Entry{static_cast<VertexId>(first_), cost_[first_]};
}

void CostIndex::unlink(std::int32_t u) {
  const std::int32_t p = prev_[u];
  const std::int32_t nx = next_[u];
  if (p != kNil) next_[p] = nx;
  if (nx != kNil) prev_[nx] = p;
  if (first_ == u) first_ = nx;
  prev_[u] = next_[u] = kNil;
  ops_ += 2;
}

void CostIndex::link_before(std::int32_t u, std::int32_t pos) {
  const std::int32_t p = prev_[pos];
  prev_[u] = p;
  next_[u] = pos;
  prev_[pos] = u;
  if (p != kNil) next_[p] = u;
  if (first_ == pos) first_ = u;
  ops_ += 3;
}

std::int32_t CostIndex::decrement(VertexId u) {
  if (!contains(u)) throw std::logic_error("decrement of removed vertex");
  const std::int32_t c = cost_[u];
  if (c < 1) throw std::logic_error("decrement of zero-cost vertex");

  std::int32_t run_start;
  if (c <= head_cap_) {
    run_start = heads_[c];
  } else {
    run_start = static_cast<std::int32_t>(u);
    while (prev_[run_start] != kNil && cost_[prev_[run_start]] == c) {
      run_start = prev_[run_start];
      ++ops_;
    }
  }

  if (run_start == static_cast<std::int32_t>(u)) {
    // Already first of its run: everything before u costs less than c, so u
    // can stay put as the tail of the (c-1) run.
    if (c <= head_cap_) {
      heads_[c] = (next_[u] != kNil && cost_[next_[u]] == c) ? next_[u] : kNil;
      ++ops_;
    }
  } else {
    unlink(static_cast<std::int32_t>(u));
    link_before(static_cast<std::int32_t>(u), run_start);
  }
  cost_[u] = c - 1;
  if (c - 1 <= head_cap_ && heads_[c - 1] == kNil) {
    heads_[c - 1] = static_cast<std::int32_t>(u);
    ++ops_;
  }
  return c - 1;
}

void CostIndex::remove(VertexId u) {
  if (!contains(u)) throw std::logic_error("double remove");
  const std::int32_t c = cost_[u];
  if (c <= head_cap_ && heads_[c] == static_cast<std::int32_t>(u)) {
    heads_[c] = (next_[u] != kNil && cost_[next_[u]] == c) ? next_[u] : kNil;
    ++ops_;
  }
  unlink(static_cast<std::int32_t>(u));
  cost_[u] = kTombstone;
  --live_;
}

void CostIndex::validate() const {
  std::size_t seen = 0;
  std::int32_t prev_cost = 0;
  std::vector<bool> in_list(cost_.size(), false);
  for (std::int32_t it = first_; it != kNil; it = next_[it]) {
    if (cost_[it] < 0) throw std::logic_error("tombstone in list");
    if (seen > 0 && cost_[it] < prev_cost) throw std::logic_error("list not sorted");
    if (next_[it] != kNil && prev_[next_[it]] != it) throw std::logic_error("broken links");
    prev_cost = cost_[it];
    in_list[it] = true;
    if (++seen > cost_.size()) throw std::logic_error("list cycle");
  }
  if (seen != live_) throw std::logic_error("live count mismatch");
  for (std::size_t u = 0; u < cost_.size(); ++u) {
    if ((cost_[u] >= 0) != in_list[u]) throw std::logic_error("membership mismatch");
  }
  // Heads must point at the first node of each cost run.
  std::vector<std::int32_t> expect(heads_.size(), kNil);
  for (std::int32_t it = first_; it != kNil; it = next_[it]) {
    const std::int32_t c = cost_[it];
    if (c <= head_cap_ && expect[c] == kNil) expect[c] = it;
  }
  for (std::size_t c = 0; c < heads_.size(); ++c) {
    if (heads_[c] != expect[c]) throw std::logic_error("stale head pointer");
  }
}

}  // namespace parsa
