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

#include "parsa/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "parsa/rng.hpp"

namespace parsa {

namespace {

// Weighted sampling pool over a fixed member list (cumulative sums + binary
// search); uniform when built without weights.
struct EndpointPool {
  std::vector<VertexId> members;
  std::vector<double> cumulative;  // empty means uniform

  VertexId draw(SplitMix64& rng) const {
    if (cumulative.empty()) return members[rng.next_below(members.size())];
    const double x = rng.next_double() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    const auto idx = std::min<std::size_t>(it - cumulative.begin(), members.size() - 1);
    return members[idx];
  }

  void build_weights(const std::vector<double>& weight_of) {
    cumulative.resize(members.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      acc += weight_of[members[i]];
      cumulative[i] = acc;
    }
  }
};

// degree distinct endpoints for v, preferring the topic pool over the global
// one for a (1 - mix) share. Falls back to a deterministic fill if rejection
// sampling clogs (tiny pools, huge degrees).
void sample_endpoints(std::uint64_t degree, VertexId v, VertexId num_u,
                      const EndpointPool& global_pool, const EndpointPool* topic_pool,
                      double mix, SplitMix64& rng,
                      std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (degree * 2 >= num_u) {
    // Dense head vertex: sample the complement instead.
    std::vector<bool> out(num_u, false);
    for (std::uint64_t dropped = num_u - degree; dropped > 0;) {
      VertexId u = static_cast<VertexId>(rng.next_below(num_u));
      if (!out[u]) {
        out[u] = true;
        --dropped;
      }
    }
    for (VertexId u = 0; u < num_u; ++u)
      if (!out[u]) edges.emplace_back(u, v);
    return;
  }

  std::unordered_set<VertexId> picked;
  picked.reserve(degree * 2);
  std::uint64_t attempts = 0;
  const std::uint64_t attempt_cap = 60 * degree + 600;
  while (picked.size() < degree && attempts < attempt_cap) {
    ++attempts;
    const EndpointPool& pool =
        (topic_pool != nullptr && !rng.next_bernoulli(mix)) ? *topic_pool : global_pool;
    const VertexId u = pool.draw(rng);
    if (picked.insert(u).second) edges.emplace_back(u, v);
  }
  for (VertexId u = 0; picked.size() < degree && u < num_u; ++u)
    if (picked.insert(u).second) edges.emplace_back(u, v);
}

}  // namespace

BipartiteGraph synthetic_powerlaw(const SyntheticConfig& cfg) {
  if (cfg.num_u == 0 || cfg.num_v == 0)
    throw std::invalid_argument("synthetic graph needs num_u, num_v >= 1");
  if (cfg.zipf_exponent <= 0) throw std::invalid_argument("zipf exponent must be positive");
  if (cfg.u_zipf_exponent < 0) throw std::invalid_argument("u zipf exponent must be >= 0");
  if (cfg.mix < 0.0 || cfg.mix > 1.0) throw std::invalid_argument("mix must be in [0, 1]");

  std::vector<double> v_weight(cfg.num_v);
  double v_total = 0.0;
  for (VertexId v = 0; v < cfg.num_v; ++v) {
    v_weight[v] = std::pow(static_cast<double>(v) + 1.0, -cfg.zipf_exponent);
    v_total += v_weight[v];
  }

  SplitMix64 rng(cfg.seed);

  std::vector<double> u_weight(cfg.num_u, 1.0);
  const bool weighted_u = cfg.u_zipf_exponent > 0.0;
  if (weighted_u) {
    // Rank = id; loaders treat external ids as arbitrary labels anyway.
    for (VertexId u = 0; u < cfg.num_u; ++u)
      u_weight[u] = std::pow(static_cast<double>(u) + 1.0, -cfg.u_zipf_exponent);
  }

  EndpointPool global_pool;
  global_pool.members.resize(cfg.num_u);
  for (VertexId u = 0; u < cfg.num_u; ++u) global_pool.members[u] = u;
  if (weighted_u) global_pool.build_weights(u_weight);

  // Topic membership: u's dealt round-robin over a shuffled order so topic
  // sizes are even. A v of topic t draws from t and its ring neighbor t+1,
  // so adjacent topics co-occur; placements that keep related topics
  // together genuinely beat ones that scatter them.
  std::vector<EndpointPool> topic_pools;
  std::vector<std::uint32_t> v_topic;
  if (cfg.topics > 0) {
    std::vector<VertexId> order(cfg.num_u);
    for (VertexId u = 0; u < cfg.num_u; ++u) order[u] = u;
    fisher_yates_shuffle(order, rng);
    std::vector<std::vector<VertexId>> members(cfg.topics);
    for (VertexId i = 0; i < cfg.num_u; ++i)
      members[i % cfg.topics].push_back(order[i]);
    topic_pools.resize(cfg.topics);
    for (std::uint32_t t = 0; t < cfg.topics; ++t) {
      auto& pool = topic_pools[t];
      pool.members = members[t];
      const auto& next = members[(t + 1) % cfg.topics];
      pool.members.insert(pool.members.end(), next.begin(), next.end());
      std::sort(pool.members.begin(), pool.members.end());
      if (weighted_u) pool.build_weights(u_weight);
    }
    v_topic.resize(cfg.num_v);
    for (VertexId v = 0; v < cfg.num_v; ++v)
      v_topic[v] = static_cast<std::uint32_t>(rng.next_below(cfg.topics));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(cfg.num_edges + cfg.num_v);
  for (VertexId v = 0; v < cfg.num_v; ++v) {
    const double share = v_weight[v] / v_total * static_cast<double>(cfg.num_edges);
    std::uint64_t degree = std::max<std::uint64_t>(1, std::llround(share));
    degree = std::min<std::uint64_t>(degree, cfg.num_u);
    const EndpointPool* topic_pool =
        cfg.topics > 0 ? &topic_pools[v_topic[v]] : nullptr;
    sample_endpoints(degree, v, cfg.num_u, global_pool, topic_pool, cfg.mix, rng, edges);
  }
  return BipartiteGraph::from_edges(cfg.num_u, cfg.num_v, std::move(edges));
}

SyntheticConfig parse_synthetic_spec(const std::string& spec) {
  SyntheticConfig cfg;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("synthetic spec item lacks '=': " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "u") cfg.num_u = static_cast<VertexId>(std::stoull(value));
      else if (key == "v") cfg.num_v = static_cast<VertexId>(std::stoull(value));
      else if (key == "edges") cfg.num_edges = std::stoull(value);
      else if (key == "zipf") cfg.zipf_exponent = std::stod(value);
      else if (key == "uzipf") cfg.u_zipf_exponent = std::stod(value);
      else if (key == "topics") cfg.topics = static_cast<std::uint32_t>(std::stoul(value));
      else if (key == "mix") cfg.mix = std::stod(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else throw std::invalid_argument("unknown synthetic key: " + key);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad synthetic value for " + key + ": " + value);
    }
  }
  return cfg;
}

}  // namespace parsa
