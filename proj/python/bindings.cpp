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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parsa/io.hpp"
#include "parsa/manifest.hpp"
#include "parsa/metrics.hpp"
#include "parsa/oracle.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/partition_v.hpp"
#include "parsa/pipeline.hpp"
#include "parsa/reference.hpp"
#include "parsa/runtime.hpp"
#include "parsa/synthetic.hpp"

namespace py = pybind11;
using namespace parsa;

namespace {

py::dict metrics_dict(const MetricsReport& rep) {
  py::dict d;
  d["k"] = rep.k;
  d["max_u_size"] = rep.max_u_size;
  d["footprint"] = rep.footprint;
  d["m_max"] = rep.m_max;
  d["traffic"] = rep.traffic;
  d["t_max"] = rep.t_max;
  d["t_sum"] = rep.t_sum;
  d["isolated_v_count"] = rep.isolated_v_count;
  return d;
}

GreedyConfig greedy_config(std::uint32_t k, std::uint32_t a, std::uint32_t b, std::uint64_t seed,
                           const std::string& balance_rule) {
  GreedyConfig cfg;
  cfg.k = k;
  cfg.a = a;
  cfg.b = b;
  cfg.seed = seed;
  cfg.balance_rule = balance_rule_from_string(balance_rule.c_str());
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vertex-cut bipartite graph partitioning (parsa)";
  m.attr("__version__") = kToolVersion;
  m.attr("UNBOUNDED_DELAY") = kUnboundedDelay;

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_property_readonly("num_u", &BipartiteGraph::num_u)
      .def_property_readonly("num_v", &BipartiteGraph::num_v)
      .def_property_readonly("num_edges", &BipartiteGraph::num_edges)
      .def("degree_u", &BipartiteGraph::degree_u, py::arg("u"))
      .def("degree_v", &BipartiteGraph::degree_v, py::arg("v"))
      .def("neighbors_of_u",
           [](const BipartiteGraph& g, VertexId u) {
             auto n = g.neighbors_of_u(u);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("neighbors_of_v",
           [](const BipartiteGraph& g, VertexId v) {
             auto n = g.neighbors_of_v(v);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("validate", &BipartiteGraph::validate)
      .def("__repr__", [](const BipartiteGraph& g) {
        return "BipartiteGraph(|U|=" + std::to_string(g.num_u()) +
               ", |V|=" + std::to_string(g.num_v()) +
               ", |E|=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("from_edges",
        [](VertexId num_u, VertexId num_v,
           std::vector<std::pair<VertexId, VertexId>> edges) {
          return BipartiteGraph::from_edges(num_u, num_v, std::move(edges));
        },
        py::arg("num_u"), py::arg("num_v"), py::arg("edges"));
  m.def("load_libsvm", [](const std::string& path) { return load_libsvm(path).graph; },
        py::arg("path"));
  m.def("load_edge_list",
        [](const std::string& path, bool directed) { return load_edge_list(path, directed).graph; },
        py::arg("path"), py::arg("directed") = true);
  m.def("read_binary_cache", &read_binary_cache, py::arg("path"));
  m.def("write_binary_cache", &write_binary_cache, py::arg("path"), py::arg("graph"));
  m.def("synthetic_powerlaw",
        [](VertexId num_u, VertexId num_v, std::uint64_t num_edges, double zipf_exponent,
           double u_zipf_exponent, std::uint32_t topics, double mix, std::uint64_t seed) {
          SyntheticConfig cfg;
          cfg.num_u = num_u;
          cfg.num_v = num_v;
          cfg.num_edges = num_edges;
          cfg.zipf_exponent = zipf_exponent;
          cfg.u_zipf_exponent = u_zipf_exponent;
          cfg.topics = topics;
          cfg.mix = mix;
          cfg.seed = seed;
          return synthetic_powerlaw(cfg);
        },
        py::arg("num_u"), py::arg("num_v"), py::arg("num_edges"),
        py::arg("zipf_exponent") = 1.5, py::arg("u_zipf_exponent") = 0.0,
        py::arg("topics") = 0, py::arg("mix") = 0.2, py::arg("seed") = 0);

  m.def("partition_u",
        [](const BipartiteGraph& g, std::uint32_t k, std::uint32_t a, std::uint32_t b,
           std::uint64_t seed, const std::string& balance_rule, std::uint32_t workers,
           std::uint32_t server_shards, std::uint64_t tau, double global_init_fraction) {
          const GreedyConfig cfg = greedy_config(k, a, b, seed, balance_rule);
          std::vector<PartitionId> assign;
          if (workers == 1 && global_init_fraction == 0.0) {
            assign = run_sequential(g, cfg).first.assign;
          } else {
            RuntimeOptions opt;
            opt.num_workers = workers;
            opt.server_shards = server_shards;
            opt.max_delay = tau;
            opt.global_init_fraction = global_init_fraction;
            assign = run_parallel(g, cfg, opt).partition.assign;
          }
          return assign;
        },
        py::arg("graph"), py::arg("k") = 16, py::arg("a") = 16, py::arg("b") = 16,
        py::arg("seed") = 0, py::arg("balance_rule") = "neighbor-set-size",
        py::arg("workers") = 1, py::arg("server_shards") = 1,
        py::arg("tau") = kUnboundedDelay, py::arg("global_init_fraction") = 0.0,
        "Assign every data vertex to a partition 0..k-1.");

  m.def("partition_v",
        [](const BipartiteGraph& g, const std::vector<PartitionId>& u_assign,
           std::uint32_t max_sweeps) {
          std::uint32_t k = 0;
          for (auto p : u_assign) k = std::max(k, p + 1);
          const auto up = UPartition::from_assignment(k, u_assign);
          const auto sets = neighbor_sets_of(g, up);
          return sweep_to_convergence(g, sets, max_sweeps).first.assign;
        },
        py::arg("graph"), py::arg("u_assign"), py::arg("max_sweeps") = 8,
        "Greedy server assignment for V given a U partition.");

  m.def("evaluate",
        [](const BipartiteGraph& g, const std::vector<PartitionId>& u_assign,
           const std::vector<PartitionId>& v_assign) {
          std::uint32_t k = 0;
          for (auto p : u_assign) k = std::max(k, p + 1);
          for (auto p : v_assign) k = std::max(k, p + 1);
          const auto up = UPartition::from_assignment(k, u_assign);
          VPartition vp;
          vp.k = k;
          vp.sizes.assign(k, 0);
          for (auto p : v_assign) vp.sizes[p]++;
          vp.assign = v_assign;
          for (VertexId v = 0; v < g.num_v(); ++v)
            if (g.degree_v(v) == 0) vp.isolated_count++;
          return metrics_dict(evaluate(g, up, vp));
        },
        py::arg("graph"), py::arg("u_assign"), py::arg("v_assign"));

  m.def("run_pipeline",
        [](const BipartiteGraph& g, std::uint32_t k, std::uint32_t a, std::uint32_t b,
           std::uint64_t seed, const std::string& balance_rule, std::uint32_t workers,
           std::uint32_t server_shards, std::uint64_t tau, std::uint32_t v_sweeps,
           double global_init_fraction) {
          PipelineConfig cfg;
          cfg.greedy = greedy_config(k, a, b, seed, balance_rule);
          cfg.runtime.num_workers = workers;
          cfg.runtime.server_shards = server_shards;
          cfg.runtime.max_delay = tau;
          cfg.runtime.global_init_fraction = global_init_fraction;
          cfg.v_sweeps = v_sweeps;
          const auto res = run_pipeline(g, cfg);
          py::dict out;
          out["u_assign"] = res.up.assign;
          out["v_assign"] = res.vp.assign;
          out["metrics"] = metrics_dict(res.metrics);
          out["v_sweeps_used"] = res.sweeps_used;
          return out;
        },
        py::arg("graph"), py::arg("k") = 16, py::arg("a") = 16, py::arg("b") = 16,
        py::arg("seed") = 0, py::arg("balance_rule") = "neighbor-set-size",
        py::arg("workers") = 1, py::arg("server_shards") = 1,
        py::arg("tau") = kUnboundedDelay, py::arg("v_sweeps") = 8,
        py::arg("global_init_fraction") = 0.0,
        "Partition U, assign V, and evaluate in one call.");

  m.def("improvement_vs_random",
        [](const BipartiteGraph& g, const std::vector<PartitionId>& u_assign,
           const std::vector<PartitionId>& v_assign, const std::string& metric,
           std::uint32_t trials, std::uint64_t seed) {
          std::uint32_t k = 0;
          for (auto p : u_assign) k = std::max(k, p + 1);
          for (auto p : v_assign) k = std::max(k, p + 1);
          const auto up = UPartition::from_assignment(k, u_assign);
          VPartition vp;
          vp.k = k;
          vp.sizes.assign(k, 0);
          for (auto p : v_assign) vp.sizes[p]++;
          vp.assign = v_assign;
          for (VertexId v = 0; v < g.num_v(); ++v)
            if (g.degree_v(v) == 0) vp.isolated_count++;
          const auto rep = evaluate(g, up, vp);
          ImprovementOptions opt;
          opt.trials = trials;
          opt.seed = seed;
          return improvement_vs_random(g, rep, metric_selector_from_string(metric.c_str()), opt);
        },
        py::arg("graph"), py::arg("u_assign"), py::arg("v_assign"), py::arg("metric") = "t-max",
        py::arg("trials") = 10, py::arg("seed") = 0,
        "Percentage improvement of this placement over averaged random ones.");

  m.def("exhaustive_partition",
        [](const BipartiteGraph& g, std::uint32_t k) {
          const auto res = exhaustive_partition(g, k);
          py::dict out;
          out["assign"] = res.best.assign;
          out["best_value"] = res.best_value;
          out["enumerated"] = res.enumerated;
          return out;
        },
        py::arg("graph"), py::arg("k"),
        "Desk-scale exhaustive optimum of max_i |N(U_i)|.");
}
