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
#include <vector>

#include "parsa/graph.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/partition_v.hpp"
#include "parsa/types.hpp"

namespace parsa {

// Quality report for one (U, V) placement. Per machine i:
//   footprint_i = |N(U_i)|, the parameters worker i keeps cached;
//   traffic_i   = |N(U_i) \ V_i| + sum_{j != i} |V_i ∩ N(U_j)|, what machine
//                 i sends/receives as worker plus what its server serves.
// t_sum adds traffic over machines, so each transfer is counted at both
// endpoints; the one-sided totals of the two directions are equal.
struct MetricsReport {
  std::uint32_t k = 0;
  std::uint64_t max_u_size = 0;

  std::vector<std::uint64_t> footprint;
  std::uint64_t m_max = 0;

  std::vector<std::uint64_t> traffic;
  std::uint64_t t_max = 0;
  std::uint64_t t_sum = 0;
  std::uint64_t worker_side_total = 0;  // sum_i |N(U_i) \ V_i|
  std::uint64_t server_side_total = 0;  // sum_i sum_{j != i} |V_i ∩ N(U_j)|

  std::uint32_t isolated_v_count = 0;
};

MetricsReport evaluate(const BipartiteGraph& g, const UPartition& up, const VPartition& vp);

enum class MetricSelector { kMMax, kTMax, kTSum };

MetricSelector metric_selector_from_string(const char* name);
const char* to_string(MetricSelector sel);
std::uint64_t select_metric(const MetricsReport& report, MetricSelector sel);

struct ImprovementOptions {
  std::uint32_t trials = 10;
  std::uint64_t seed = 0;
  // Assign each random-baseline v uniformly among the machines that need it
  // (the deployment assumption); false draws fully uniform placements.
  bool feasible_v = true;
};

// (random_avg - candidate) / candidate * 100, the improvement of `candidate`
// over the averaged random placement; +infinity when the candidate metric is
// zero but random is not.
double improvement_vs_random(const BipartiteGraph& g, const MetricsReport& candidate,
                             MetricSelector sel, const ImprovementOptions& opt);

// One uniformly random placement; shared by the improvement baseline and the
// benchmark driver.
std::pair<UPartition, VPartition> random_placement(const BipartiteGraph& g, std::uint32_t k,
                                                   std::uint64_t seed, bool feasible_v);

}  // namespace parsa
