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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parsa/io.hpp"
#include "parsa/manifest.hpp"
#include "parsa/metrics.hpp"
#include "parsa/pipeline.hpp"
#include "parsa/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("PARSA_LOG");
    if (env == nullptr) return 1;
    const std::string s(env);
    if (s == "debug") return 2;
    if (s == "quiet" || s == "error") return 0;
    return 1;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[parsa] " << msg << "\n";
}

std::string partition_sidecar(const char* kind, std::uint32_t k, std::uint64_t seed,
                              const std::vector<std::uint64_t>& sizes,
                              const parsa::RunManifest& m) {
  json j;
  j["kind"] = kind;
  j["k"] = k;
  j["seed"] = seed;
  j["sizes"] = sizes;
  j["config"] = {{"a", m.a},       {"b", m.b},
                 {"balance_rule", m.balance_rule},
                 {"tau", m.tau},   {"workers", m.workers},
                 {"server_shards", m.server_shards}};
  return j.dump(2) + "\n";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

json improvement_block(const parsa::BipartiteGraph& g, const parsa::MetricsReport& rep,
                       std::uint32_t trials, std::uint64_t seed) {
  parsa::ImprovementOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  json j;
  j["trials"] = trials;
  j["seed"] = seed;
  j["m_max_pct"] = parsa::improvement_vs_random(g, rep, parsa::MetricSelector::kMMax, opt);
  j["t_max_pct"] = parsa::improvement_vs_random(g, rep, parsa::MetricSelector::kTMax, opt);
  j["t_sum_pct"] = parsa::improvement_vs_random(g, rep, parsa::MetricSelector::kTSum, opt);
  return j;
}

struct CommonGraphArgs {
  std::string input;
  std::string format = "libsvm";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input,
                    "input path, or generator spec for --format synthetic")
        ->required();
    cmd->add_option("--format", format,
                    "libsvm | edgelist-directed | edgelist-undirected | cache | synthetic");
  }
};

int cmd_convert(const CommonGraphArgs& in, const std::string& out_path) {
  parsa::LoadedGraph loaded;
  if (in.format == "libsvm") {
    loaded = parsa::load_libsvm(in.input);
  } else if (in.format == "edgelist-directed") {
    loaded = parsa::load_edge_list(in.input, true);
  } else if (in.format == "edgelist-undirected") {
    loaded = parsa::load_edge_list(in.input, false);
  } else {
    throw CLI::ValidationError("--format", "convert accepts libsvm or edgelist inputs");
  }
  loaded.graph.validate();
  parsa::write_binary_cache(out_path, loaded.graph);
  parsa::write_id_map(out_path + ".idmap", loaded);
  std::cout << loaded.graph.num_u() << " " << loaded.graph.num_v() << " "
            << loaded.graph.num_edges() << "\n";
  return kExitOk;
}

int cmd_partition(const parsa::RunManifest& manifest_in) {
  parsa::RunManifest m = manifest_in;
  const fs::path out_dir(m.out_dir);
  fs::create_directories(out_dir);

  log_info("loading " + m.input + " (" + m.format + ")");
  const parsa::BipartiteGraph g = parsa::load_graph(m.input, m.format);
  log_info("graph: |U|=" + std::to_string(g.num_u()) + " |V|=" + std::to_string(g.num_v()) +
           " |E|=" + std::to_string(g.num_edges()));

  const parsa::PipelineConfig cfg = parsa::pipeline_config_from_manifest(m);
  const auto t0 = std::chrono::steady_clock::now();
  parsa::PipelineResult res = parsa::run_pipeline(g, cfg);
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log_info("partitioned in " + std::to_string(elapsed) + "s, v sweeps: " +
           std::to_string(res.sweeps_used));

  parsa::write_partition_file((out_dir / "u_partition.txt").string(), res.up.assign);
  parsa::write_partition_file((out_dir / "v_partition.txt").string(), res.vp.assign);
  write_text(out_dir / "u_partition.json",
             partition_sidecar("u-partition", m.k, m.seed, res.up.sizes, m));
  write_text(out_dir / "v_partition.json",
             partition_sidecar("v-partition", m.k, m.seed, res.vp.sizes, m));

  json metrics = json::parse(parsa::metrics_to_json(res.metrics, &m));
  if (m.improvement_trials > 0)
    metrics["improvement_vs_random"] =
        improvement_block(g, res.metrics, m.improvement_trials, m.seed);
  write_text(out_dir / "metrics.json", metrics.dump(2) + "\n");

  m.created_at = parsa::current_timestamp_rfc3339();
  m.save((out_dir / "manifest.json").string());

  std::cout << parsa::metrics_to_table(res.metrics);
  return kExitOk;
}

int cmd_assign_v(const CommonGraphArgs& in, const std::string& u_partition,
                 const std::string& out_dir_s, std::uint32_t v_sweeps) {
  const parsa::BipartiteGraph g = parsa::load_graph(in.input, in.format);
  auto u_assign = parsa::read_partition_file(u_partition, g.num_u());
  std::uint32_t k = 0;
  for (auto p : u_assign) k = std::max(k, p + 1);
  const auto up = parsa::UPartition::from_assignment(k, std::move(u_assign));

  const parsa::NeighborSets sets = parsa::neighbor_sets_of(g, up);
  auto [vp, sweeps] = parsa::sweep_to_convergence(g, sets, v_sweeps);
  log_info("v assignment converged after " + std::to_string(sweeps) + " sweep(s)");

  const fs::path out_dir(out_dir_s);
  fs::create_directories(out_dir);
  parsa::write_partition_file((out_dir / "v_partition.txt").string(), vp.assign);
  json j;
  j["kind"] = "v-partition";
  j["k"] = k;
  j["sizes"] = vp.sizes;
  j["isolated_v_count"] = vp.isolated_count;
  j["sweeps"] = sweeps;
  write_text(out_dir / "v_partition.json", j.dump(2) + "\n");
  return kExitOk;
}

int cmd_evaluate(const CommonGraphArgs& in, const std::string& u_partition,
                 const std::string& v_partition, std::uint32_t trials, std::uint64_t seed,
                 const std::string& out_file, const std::string& csv_file) {
  const parsa::BipartiteGraph g = parsa::load_graph(in.input, in.format);
  auto u_assign = parsa::read_partition_file(u_partition, g.num_u());
  auto v_assign = parsa::read_partition_file(v_partition, g.num_v());
  std::uint32_t k = 0;
  for (auto p : u_assign) k = std::max(k, p + 1);
  for (auto p : v_assign) k = std::max(k, p + 1);

  const auto up = parsa::UPartition::from_assignment(k, std::move(u_assign));
  parsa::VPartition vp;
  vp.k = k;
  vp.sizes.assign(k, 0);
  for (auto p : v_assign) vp.sizes[p]++;
  vp.assign = std::move(v_assign);
  for (parsa::VertexId v = 0; v < g.num_v(); ++v)
    if (g.degree_v(v) == 0) vp.isolated_count++;

  const parsa::MetricsReport rep = parsa::evaluate(g, up, vp);
  json j = json::parse(parsa::metrics_to_json(rep, nullptr));
  if (trials > 0) j["improvement_vs_random"] = improvement_block(g, rep, trials, seed);

  std::cout << parsa::metrics_to_table(rep);
  const std::string text = j.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    write_text(out_file, text);
  }
  if (!csv_file.empty()) {
    std::ostringstream csv;
    csv << "machine,footprint,traffic\n";
    for (std::uint32_t i = 0; i < rep.k; ++i)
      csv << i << "," << rep.footprint[i] << "," << rep.traffic[i] << "\n";
    write_text(csv_file, csv.str());
  }
  return kExitOk;
}

int cmd_bench(const parsa::RunManifest& base, const std::vector<std::uint32_t>& k_list,
              const std::vector<std::uint32_t>& a_list, const std::vector<std::uint32_t>& b_list,
              std::uint32_t trials, const std::string& out_csv) {
  if (trials == 0) throw CLI::ValidationError("--trials", "must be >= 1");

  const parsa::BipartiteGraph g = parsa::load_graph(base.input, base.format);

  struct Config {
    std::uint32_t k, a, b;
  };
  std::vector<Config> configs;
  if (!k_list.empty()) {
    for (auto k : k_list) configs.push_back({k, base.a, base.b});
  } else if (!a_list.empty() || !b_list.empty()) {
    const auto& as = a_list.empty() ? std::vector<std::uint32_t>{base.a} : a_list;
    const auto& bs = b_list.empty() ? std::vector<std::uint32_t>{base.b} : b_list;
    for (auto b : bs)
      for (auto a : as) configs.push_back({base.k, a, b});
  } else {
    configs.push_back({base.k, base.a, base.b});
  }

  std::ostringstream csv;
  csv << "k,a,b,seed,m_max,t_max,t_sum,imprv_m_max_pct,imprv_t_max_pct,imprv_t_sum_pct,"
         "seconds\n";
  for (const Config& c : configs) {
    parsa::RunManifest m = base;
    m.k = c.k;
    m.a = c.a;
    m.b = c.b;
    const parsa::PipelineConfig cfg = parsa::pipeline_config_from_manifest(m);

    const auto t0 = std::chrono::steady_clock::now();
    const parsa::PipelineResult res = parsa::run_pipeline(g, cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    parsa::ImprovementOptions opt;
    opt.trials = trials;
    opt.seed = m.seed;
    const double im = parsa::improvement_vs_random(g, res.metrics,
                                                   parsa::MetricSelector::kMMax, opt);
    const double it = parsa::improvement_vs_random(g, res.metrics,
                                                   parsa::MetricSelector::kTMax, opt);
    const double is = parsa::improvement_vs_random(g, res.metrics,
                                                   parsa::MetricSelector::kTSum, opt);
    csv << c.k << "," << c.a << "," << c.b << "," << m.seed << "," << res.metrics.m_max << ","
        << res.metrics.t_max << "," << res.metrics.t_sum << "," << im << "," << it << "," << is
        << "," << secs << "\n";
    log_info("bench k=" + std::to_string(c.k) + " a=" + std::to_string(c.a) +
             " b=" + std::to_string(c.b) + " done in " + std::to_string(secs) + "s");
  }
  if (out_csv.empty()) {
    std::cout << csv.str();
  } else {
    write_text(out_csv, csv.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parsa: vertex-cut bipartite graph partitioner"};
  app.require_subcommand(1);

  // convert
  auto* convert = app.add_subcommand("convert", "parse a text graph into the binary cache");
  CommonGraphArgs convert_in;
  convert_in.add_to(convert);
  std::string convert_out;
  convert->add_option("--out", convert_out, "cache file path")->required();

  // partition
  auto* partition = app.add_subcommand("partition", "partition U and V and evaluate");
  parsa::RunManifest manifest;
  std::string manifest_file;
  CommonGraphArgs part_in;
  part_in.add_to(partition);
  partition->add_option("--manifest", manifest_file, "load options from a manifest JSON");
  partition->add_option("--out", manifest.out_dir, "output directory")->required();
  partition->add_option("--k", manifest.k, "number of partitions");
  partition->add_option("--a", manifest.a, "initialization passes");
  partition->add_option("--b", manifest.b, "subgraph blocks");
  partition->add_option("--seed", manifest.seed, "RNG seed");
  partition->add_option("--balance-rule", manifest.balance_rule,
                        "neighbor-set-size | partition-size");
  std::string tau_str = "inf";
  partition->add_option("--tau", tau_str, "max delay (integer or 'inf')");
  partition->add_option("--workers", manifest.workers, "worker count");
  partition->add_option("--server-shards", manifest.server_shards, "server shard count");
  partition->add_option("--global-init-frac", manifest.global_init_fraction,
                        "fraction of U for global initialization");
  partition->add_option("--v-sweeps", manifest.v_sweeps, "max V sweeps");
  partition->add_option("--trials", manifest.improvement_trials,
                        "random trials for the improvement figures (0 disables)");

  // assign-v
  auto* assignv = app.add_subcommand("assign-v", "assign V given an existing U partition");
  CommonGraphArgs assignv_in;
  assignv_in.add_to(assignv);
  std::string assignv_up, assignv_out;
  std::uint32_t assignv_sweeps = 8;
  assignv->add_option("--u-partition", assignv_up, "u partition file")->required();
  assignv->add_option("--out", assignv_out, "output directory")->required();
  assignv->add_option("--v-sweeps", assignv_sweeps, "max V sweeps");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "compute metrics for partition files");
  CommonGraphArgs eval_in;
  eval_in.add_to(evaluate);
  std::string eval_up, eval_vp, eval_out, eval_csv;
  std::uint32_t eval_trials = 0;
  std::uint64_t eval_seed = 0;
  evaluate->add_option("--u-partition", eval_up)->required();
  evaluate->add_option("--v-partition", eval_vp)->required();
  evaluate->add_option("--trials", eval_trials, "random trials for improvement (0 disables)");
  evaluate->add_option("--seed", eval_seed, "baseline seed");
  evaluate->add_option("--out", eval_out, "metrics JSON path (default stdout)");
  evaluate->add_option("--csv", eval_csv, "per-machine CSV path");

  // bench
  auto* bench = app.add_subcommand("bench", "sweep configurations, emit quality/time CSV");
  CommonGraphArgs bench_in;
  bench_in.add_to(bench);
  parsa::RunManifest bench_base;
  std::vector<std::uint32_t> bench_k, bench_a, bench_b;
  std::uint32_t bench_trials = 10;
  std::string bench_csv;
  bench->add_option("--k-list", bench_k, "partition counts to sweep")->delimiter(',');
  bench->add_option("--a-list", bench_a, "initialization pass grid")->delimiter(',');
  bench->add_option("--b-list", bench_b, "subgraph count grid")->delimiter(',');
  bench->add_option("--k", bench_base.k, "fixed k for a/b grids");
  bench->add_option("--a", bench_base.a, "fixed a");
  bench->add_option("--b", bench_base.b, "fixed b");
  bench->add_option("--seed", bench_base.seed, "RNG seed");
  bench->add_option("--trials", bench_trials, "random trials per configuration");
  bench->add_option("--workers", bench_base.workers, "worker count");
  bench->add_option("--out", bench_csv, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);

    if (convert->parsed()) return cmd_convert(convert_in, convert_out);
    if (partition->parsed()) {
      if (!manifest_file.empty()) {
        parsa::RunManifest loaded = parsa::RunManifest::load(manifest_file);
        loaded.out_dir = manifest.out_dir;
        manifest = loaded;
      } else {
        manifest.input = part_in.input;
        manifest.format = part_in.format;
        manifest.tau = tau_str == "inf" ? parsa::kUnboundedDelay : std::stoull(tau_str);
      }
      return cmd_partition(manifest);
    }
    if (assignv->parsed())
      return cmd_assign_v(assignv_in, assignv_up, assignv_out, assignv_sweeps);
    if (evaluate->parsed())
      return cmd_evaluate(eval_in, eval_up, eval_vp, eval_trials, eval_seed, eval_out, eval_csv);
    if (bench->parsed()) {
      bench_base.input = bench_in.input;
      bench_base.format = bench_in.format;
      return cmd_bench(bench_base, bench_k, bench_a, bench_b, bench_trials, bench_csv);
    }
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  } catch (const parsa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
