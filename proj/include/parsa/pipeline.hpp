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
#include <string>

#include "parsa/graph.hpp"
#include "parsa/manifest.hpp"
#include "parsa/metrics.hpp"
#include "parsa/partition_u.hpp"
#include "parsa/partition_v.hpp"
#include "parsa/runtime.hpp"

namespace parsa {

// partition U -> derive exact neighbor sets -> sweep V -> evaluate.
// Sequential when workers == 1, otherwise the parallel runtime.
struct PipelineConfig {
  GreedyConfig greedy;
  RuntimeOptions runtime;
  std::uint32_t v_sweeps = 8;
};

struct PipelineResult {
  UPartition up;
  VPartition vp;
  MetricsReport metrics;
  std::uint32_t sweeps_used = 0;
};

PipelineResult run_pipeline(const BipartiteGraph& g, const PipelineConfig& cfg,
                            const NeighborSets* initial_sets = nullptr);

PipelineConfig pipeline_config_from_manifest(const RunManifest& m);

// Loads per the manifest's format field (libsvm / edgelist-* / cache /
// synthetic with the input holding the generator spec).
BipartiteGraph load_graph(const std::string& input, const std::string& format);

// JSON renderings used by the CLI and the python module.
std::string metrics_to_json(const MetricsReport& rep, const RunManifest* config_echo);
std::string metrics_to_table(const MetricsReport& rep);

}  // namespace parsa
