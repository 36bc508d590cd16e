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

#include "parsa/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace parsa {

namespace {

constexpr char kCacheMagic[8] = {'P', 'S', 'A', 'G', 'R', 'P', 'H', '1'};
constexpr std::uint32_t kCacheVersion = 1;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
  if (errno != 0 || end != tok.c_str() + tok.size() || tok[0] == '-') return false;
  out = v;
  return true;
}

}  // namespace

LoadedGraph load_libsvm(const std::string& path) {
  std::ifstream in = open_input(path);

  std::vector<std::vector<VertexId>> adj;
  VertexId max_index = 0;
  bool any_feature = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line

    std::vector<VertexId> row;
    while (ls >> tok) {
      const std::size_t colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError(path, line_no, "expected idx:val, got '" + tok + "'");
      std::uint64_t idx;
      if (!parse_u64(tok.substr(0, colon), idx))
        throw ParseError(path, line_no, "bad feature index in '" + tok + "'");
      const std::string val = tok.substr(colon + 1);
      errno = 0;
      char* end = nullptr;
      std::strtod(val.c_str(), &end);
      if (val.empty() || errno != 0 || end != val.c_str() + val.size())
        throw ParseError(path, line_no, "bad feature value in '" + tok + "'");
      row.push_back(static_cast<VertexId>(idx));
      max_index = std::max(max_index, static_cast<VertexId>(idx));
      any_feature = true;
    }
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw ParseError(path, line_no, "duplicate feature index in row");
    adj.push_back(std::move(row));
  }

  LoadedGraph out;
  out.identity_ids = true;
  out.graph = BipartiteGraph::from_adjacency(any_feature ? max_index + 1 : 0, std::move(adj));
  return out;
}

LoadedGraph load_edge_list(const std::string& path, bool directed) {
  std::ifstream in = open_input(path);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;
    if (a[0] == '#') continue;
    if (!(ls >> b)) throw ParseError(path, line_no, "expected two node ids");
    std::string extra;
    if (ls >> extra) throw ParseError(path, line_no, "trailing token '" + extra + "'");
    std::uint64_t src, dst;
    if (!parse_u64(a, src) || !parse_u64(b, dst))
      throw ParseError(path, line_no, "non-integer node id");
    raw.emplace_back(src, dst);
  }

  // Compact the observed node ids; U' = V = node set.
  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [s, d] : raw) {
    ids.push_back(s);
    ids.push_back(d);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::unordered_map<std::uint64_t, VertexId> dense;
  dense.reserve(ids.size());
  bool identity = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    dense[ids[i]] = static_cast<VertexId>(i);
    identity = identity && ids[i] == i;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size() * (directed ? 1 : 2));
  for (auto [s, d] : raw) {
    const VertexId a = dense[s], b = dense[d];
    edges.emplace_back(a, b);
    if (!directed && a != b) edges.emplace_back(b, a);
  }

  LoadedGraph out;
  const VertexId n = static_cast<VertexId>(ids.size());
  out.graph = BipartiteGraph::from_edges(n, n, std::move(edges));
  out.identity_ids = identity;
  if (!identity) {
    out.u_to_original = ids;
    out.v_to_original = std::move(ids);
  }
  return out;
}

void write_binary_cache(const std::string& path, const BipartiteGraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);

  auto put = [&](const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  };
  put(kCacheMagic, sizeof(kCacheMagic));
  put(&kCacheVersion, sizeof(kCacheVersion));
  const std::uint32_t flags = 0;
  put(&flags, sizeof(flags));
  const std::uint64_t nu = g.num_u(), nv = g.num_v(), ne = g.num_edges();
  put(&nu, 8);
  put(&nv, 8);
  put(&ne, 8);
  put(g.u_offsets().data(), (g.num_u() + 1) * sizeof(EdgeCount));
  put(g.u_adjacency().data(), g.num_edges() * sizeof(VertexId));
  if (!out) throw std::runtime_error("short write to " + path);
}

BipartiteGraph read_binary_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);

  auto get = [&](void* p, std::size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in) throw std::runtime_error("truncated cache file " + path);
  };
  char magic[8];
  get(magic, 8);
  if (std::memcmp(magic, kCacheMagic, 8) != 0)
    throw std::runtime_error(path + " is not a graph cache");
  std::uint32_t version, flags;
  get(&version, 4);
  get(&flags, 4);
  if (version != kCacheVersion)
    throw std::runtime_error(path + ": unsupported cache version " + std::to_string(version));
  std::uint64_t nu, nv, ne;
  get(&nu, 8);
  get(&nv, 8);
  get(&ne, 8);

  std::vector<EdgeCount> offsets(nu + 1);
  get(offsets.data(), (nu + 1) * sizeof(EdgeCount));
  std::vector<VertexId> adj(ne);
  get(adj.data(), ne * sizeof(VertexId));

  std::vector<std::vector<VertexId>> rows(nu);
  for (std::uint64_t u = 0; u < nu; ++u)
    rows[u].assign(adj.begin() + static_cast<std::ptrdiff_t>(offsets[u]),
                   adj.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]));
  return BipartiteGraph::from_adjacency(static_cast<VertexId>(nv), std::move(rows));
}

void write_id_map(const std::string& path, const LoadedGraph& loaded) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (loaded.identity_ids) {
    out << "identity\n";
    return;
  }
  out << "nodes " << loaded.u_to_original.size() << "\n";
  for (std::size_t i = 0; i < loaded.u_to_original.size(); ++i)
    out << i << " " << loaded.u_to_original[i] << "\n";
}

void write_partition_file(const std::string& path, const std::vector<PartitionId>& assign) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < assign.size(); ++i) out << i << " " << assign[i] << "\n";
  if (!out) throw std::runtime_error("short write to " + path);
}

std::vector<PartitionId> read_partition_file(const std::string& path, std::size_t expected) {
  std::ifstream in = open_input(path);
  std::vector<PartitionId> assign(expected, kUnassigned);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError(path, line_no, "expected '<id> <partition>'");
    std::uint64_t id, part;
    if (!parse_u64(a, id) || !parse_u64(b, part))
      throw ParseError(path, line_no, "non-integer field");
    if (id >= expected) throw ParseError(path, line_no, "vertex id out of range");
    assign[id] = static_cast<PartitionId>(part);
  }
  for (std::size_t i = 0; i < expected; ++i)
    if (assign[i] == kUnassigned)
      throw std::runtime_error(path + ": vertex " + std::to_string(i) + " unassigned");
  return assign;
}

}  // namespace parsa
