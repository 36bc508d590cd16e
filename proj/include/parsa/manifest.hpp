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

#include "parsa/types.hpp"

namespace parsa {

inline constexpr const char* kToolVersion = "0.1.0";

// Everything needed to reproduce one run. Serialized alongside the outputs;
// round-trips losslessly through JSON (created_at is informational only).
struct RunManifest {
  std::string input;
  std::string format;       // libsvm | edgelist-directed | edgelist-undirected | cache | synthetic
  std::string out_dir;

  std::uint32_t k = 16;
  std::uint32_t a = 16;
  std::uint32_t b = 16;
  std::uint64_t seed = 0;
  std::string balance_rule = "neighbor-set-size";

  std::uint64_t tau = std::uint64_t(-1);  // max delay; UINT64_MAX = unbounded
  std::uint32_t workers = 1;
  std::uint32_t server_shards = 1;
  double global_init_fraction = 0.0;
  std::uint32_t v_sweeps = 8;

  std::uint32_t improvement_trials = 2;

  std::string created_at;   // RFC 3339, filled at write time
  std::string tool_version = kToolVersion;

  std::string to_json_string() const;
  static RunManifest from_json_string(const std::string& text);

  void save(const std::string& path) const;
  static RunManifest load(const std::string& path);
};

std::string current_timestamp_rfc3339();

}  // namespace parsa
