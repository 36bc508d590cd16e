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

#include "parsa/pipeline.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "parsa/io.hpp"
#include "parsa/synthetic.hpp"

namespace parsa {

using nlohmann::json;

PipelineResult run_pipeline(const BipartiteGraph& g, const PipelineConfig& cfg,
                            const NeighborSets* initial_sets) {
  PipelineResult out;
  if (cfg.runtime.num_workers == 1 && cfg.runtime.global_init_fraction == 0.0) {
    out.up = run_sequential(g, cfg.greedy, initial_sets).first;
  } else {
    out.up = run_parallel(g, cfg.greedy, cfg.runtime, initial_sets).partition;
  }
  const NeighborSets exact = neighbor_sets_of(g, out.up);
  auto [vp, sweeps] = sweep_to_convergence(g, exact, cfg.v_sweeps);
  out.vp = std::move(vp);
  out.sweeps_used = sweeps;
  out.metrics = evaluate(g, out.up, out.vp);
  return out;
}

PipelineConfig pipeline_config_from_manifest(const RunManifest& m) {
  PipelineConfig cfg;
  cfg.greedy.k = m.k;
  cfg.greedy.a = m.a;
  cfg.greedy.b = m.b;
  cfg.greedy.seed = m.seed;
  cfg.greedy.balance_rule = balance_rule_from_string(m.balance_rule.c_str());
  cfg.runtime.num_workers = m.workers;
  cfg.runtime.server_shards = m.server_shards;
  cfg.runtime.max_delay = m.tau;
  cfg.runtime.global_init_fraction = m.global_init_fraction;
  cfg.v_sweeps = m.v_sweeps;
  return cfg;
}

BipartiteGraph load_graph(const std::string& input, const std::string& format) {
  if (format == "libsvm") return load_libsvm(input).graph;
  if (format == "edgelist-directed") return load_edge_list(input, true).graph;
  if (format == "edgelist-undirected") return load_edge_list(input, false).graph;
  if (format == "cache") return read_binary_cache(input);
  if (format == "synthetic") return synthetic_powerlaw(parse_synthetic_spec(input));
  throw std::invalid_argument("unknown input format: " + format);
}

std::string metrics_to_json(const MetricsReport& rep, const RunManifest* config_echo) {
  json j;
  j["k"] = rep.k;
  j["max_u_size"] = rep.max_u_size;
  j["footprint"] = rep.footprint;
  j["m_max"] = rep.m_max;
  j["traffic"] = rep.traffic;
  j["t_max"] = rep.t_max;
  j["t_sum"] = rep.t_sum;
  j["worker_side_total"] = rep.worker_side_total;
  j["server_side_total"] = rep.server_side_total;
  j["isolated_v_count"] = rep.isolated_v_count;
  if (config_echo != nullptr) {
    j["config"] = json{{"input", config_echo->input},
                       {"format", config_echo->format},
                       {"k", config_echo->k},
                       {"a", config_echo->a},
                       {"b", config_echo->b},
                       {"seed", config_echo->seed},
                       {"balance_rule", config_echo->balance_rule},
                       {"tau", config_echo->tau},
                       {"workers", config_echo->workers},
                       {"server_shards", config_echo->server_shards},
                       {"global_init_fraction", config_echo->global_init_fraction},
                       {"v_sweeps", config_echo->v_sweeps}};
  }
  return j.dump(2) + "\n";
}

std::string metrics_to_table(const MetricsReport& rep) {
  std::ostringstream os;
  os << std::setw(8) << "machine" << std::setw(12) << "footprint" << std::setw(12) << "traffic"
     << "\n";
  for (std::uint32_t i = 0; i < rep.k; ++i) {
    os << std::setw(8) << i << std::setw(12) << rep.footprint[i] << std::setw(12) << rep.traffic[i]
       << "\n";
  }
  os << "max_u_size=" << rep.max_u_size << " m_max=" << rep.m_max << " t_max=" << rep.t_max
     << " t_sum=" << rep.t_sum << " isolated_v=" << rep.isolated_v_count << "\n";
  return os.str();
}

}  // namespace parsa
