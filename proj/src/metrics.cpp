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

#include "parsa/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "parsa/bitset.hpp"
#include "parsa/rng.hpp"

namespace parsa {

MetricsReport evaluate(const BipartiteGraph& g, const UPartition& up, const VPartition& vp) {
  if (up.k != vp.k) throw std::invalid_argument("U and V partitions disagree on k");
  if (up.assign.size() != g.num_u() || vp.assign.size() != g.num_v())
    throw std::invalid_argument("partition size inconsistent with graph");
  const std::uint32_t k = up.k;

  MetricsReport rep;
  rep.k = k;
  rep.max_u_size = up.max_size();
  rep.footprint.assign(k, 0);
  rep.traffic.assign(k, 0);

  std::vector<std::uint64_t> worker_side(k, 0), server_side(k, 0);
  Bitset touched(k);
  for (VertexId v = 0; v < g.num_v(); ++v) {
    if (g.degree_v(v) == 0) {
      rep.isolated_v_count++;
      continue;
    }
    touched.clear();
    for (VertexId u : g.neighbors_of_v(v)) touched.set(up.assign[u]);

    const PartitionId owner = vp.assign[v];
    std::uint64_t sharers = 0;
    touched.for_each([&](std::size_t i) {
      ++sharers;
      rep.footprint[i]++;
      if (static_cast<PartitionId>(i) != owner) worker_side[i]++;
    });
    server_side[owner] += sharers - (touched.test(owner) ? 1 : 0);
  }

  for (std::uint32_t i = 0; i < k; ++i) {
    rep.traffic[i] = worker_side[i] + server_side[i];
    rep.m_max = std::max(rep.m_max, rep.footprint[i]);
    rep.t_max = std::max(rep.t_max, rep.traffic[i]);
    rep.t_sum += rep.traffic[i];
    rep.worker_side_total += worker_side[i];
    rep.server_side_total += server_side[i];
  }
  return rep;
}

MetricSelector metric_selector_from_string(const char* name) {
  std::string s(name);
  if (s == "m-max") return MetricSelector::kMMax;
  if (s == "t-max") return MetricSelector::kTMax;
  if (s == "t-sum") return MetricSelector::kTSum;
  throw std::invalid_argument("unknown metric: " + s);
}

const char* to_string(MetricSelector sel) {
  switch (sel) {
    case MetricSelector::kMMax: return "m-max";
    case MetricSelector::kTMax: return "t-max";
    default: return "t-sum";
  }
}

std::uint64_t select_metric(const MetricsReport& report, MetricSelector sel) {
  switch (sel) {
    case MetricSelector::kMMax: return report.m_max;
    case MetricSelector::kTMax: return report.t_max;
    default: return report.t_sum;
  }
}

std::pair<UPartition, VPartition> random_placement(const BipartiteGraph& g, std::uint32_t k,
                                                   std::uint64_t seed, bool feasible_v) {
  SplitMix64 rng(seed);
  std::vector<PartitionId> u_assign(g.num_u());
  for (VertexId u = 0; u < g.num_u(); ++u)
    u_assign[u] = static_cast<PartitionId>(rng.next_below(k));
  UPartition up = UPartition::from_assignment(k, std::move(u_assign));

  VPartition vp;
  vp.k = k;
  vp.assign.assign(g.num_v(), kUnassigned);
  vp.sizes.assign(k, 0);
  std::vector<PartitionId> owners;
  for (VertexId v = 0; v < g.num_v(); ++v) {
    PartitionId p;
    if (g.degree_v(v) == 0) {
      vp.isolated_count++;
      p = static_cast<PartitionId>(rng.next_below(k));
    } else if (feasible_v) {
      owners.clear();
      for (VertexId u : g.neighbors_of_v(v)) owners.push_back(up.assign[u]);
      std::sort(owners.begin(), owners.end());
      owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
      p = owners[rng.next_below(owners.size())];
    } else {
      p = static_cast<PartitionId>(rng.next_below(k));
    }
    vp.assign[v] = p;
    vp.sizes[p]++;
  }
  return {std::move(up), std::move(vp)};
}

double improvement_vs_random(const BipartiteGraph& g, const MetricsReport& candidate,
                             MetricSelector sel, const ImprovementOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("trials must be >= 1");
  double sum = 0.0;
  for (std::uint32_t t = 0; t < opt.trials; ++t) {
    auto [up, vp] = random_placement(g, candidate.k, derive_seed(opt.seed, t), opt.feasible_v);
    sum += static_cast<double>(select_metric(evaluate(g, up, vp), sel));
  }
  const double random_avg = sum / opt.trials;
  const double cand = static_cast<double>(select_metric(candidate, sel));
  if (cand == 0.0)
    return random_avg > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return (random_avg - cand) / cand * 100.0;
}

}  // namespace parsa
