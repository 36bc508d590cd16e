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

#include "parsa/manifest.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace parsa {

using nlohmann::json;

std::string current_timestamp_rfc3339() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RunManifest::to_json_string() const {
  json j;
  j["input"] = input;
  j["format"] = format;
  j["out_dir"] = out_dir;
  j["k"] = k;
  j["a"] = a;
  j["b"] = b;
  j["seed"] = seed;
  j["balance_rule"] = balance_rule;
  j["tau"] = tau;
  j["workers"] = workers;
  j["server_shards"] = server_shards;
  j["global_init_fraction"] = global_init_fraction;
  j["v_sweeps"] = v_sweeps;
  j["improvement_trials"] = improvement_trials;
  j["created_at"] = created_at;
  j["tool_version"] = tool_version;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json_string(const std::string& text) {
  const json j = json::parse(text);
  RunManifest m;
  m.input = j.at("input").get<std::string>();
  m.format = j.at("format").get<std::string>();
  m.out_dir = j.at("out_dir").get<std::string>();
  m.k = j.at("k").get<std::uint32_t>();
  m.a = j.at("a").get<std::uint32_t>();
  m.b = j.at("b").get<std::uint32_t>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.balance_rule = j.at("balance_rule").get<std::string>();
  m.tau = j.at("tau").get<std::uint64_t>();
  m.workers = j.at("workers").get<std::uint32_t>();
  m.server_shards = j.at("server_shards").get<std::uint32_t>();
  m.global_init_fraction = j.at("global_init_fraction").get<double>();
  m.v_sweeps = j.at("v_sweeps").get<std::uint32_t>();
  m.improvement_trials = j.at("improvement_trials").get<std::uint32_t>();
  m.created_at = j.value("created_at", "");
  m.tool_version = j.value("tool_version", "");
  return m;
}

void RunManifest::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json_string();
}

RunManifest RunManifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

}  // namespace parsa
