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

namespace parsa {

// Synthetic power-law bipartite graph: parameter-vertex degrees follow a
// Zipf profile (degree of the r-th ranked v proportional to (r+1)^-exponent,
// scaled to roughly num_edges in total, minimum 1), endpoints drawn without
// replacement. Stands in for the click-through-rate / text datasets used in
// benchmarks.
//
// Two optional layers of realism:
//   - u_zipf_exponent > 0 skews the data-vertex degrees too (document
//     lengths / natural-graph degrees are heavy-tailed, with many
//     degree-zero-or-one vertices);
//   - topics > 0 plants latent co-occurrence structure: each u and v belong
//     to one topic, and a v draws its endpoints from its own topic's u's
//     except for a `mix` fraction drawn from everywhere.
// Neither layer changes the v-degree profile.
struct SyntheticConfig {
  VertexId num_u = 10000;
  VertexId num_v = 5000;
  std::uint64_t num_edges = 60000;
  double zipf_exponent = 1.5;
  double u_zipf_exponent = 0.0;  // 0 = uniform endpoint choice
  std::uint32_t topics = 0;
  double mix = 0.2;
  std::uint64_t seed = 0;
};

BipartiteGraph synthetic_powerlaw(const SyntheticConfig& cfg);

// Parses "u=10000,v=5000,edges=60000,zipf=1.5,topics=64,mix=0.2,seed=0"
// (any subset of keys).
SyntheticConfig parse_synthetic_spec(const std::string& spec);

}  // namespace parsa
