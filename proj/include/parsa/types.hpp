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
#include <limits>

namespace parsa {

// Dense 0-based vertex id, used for both data (U) and parameter (V) vertices.
using VertexId = std::uint32_t;
using PartitionId = std::uint32_t;
using EdgeCount = std::uint64_t;

inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();
inline constexpr PartitionId kUnassigned = std::numeric_limits<PartitionId>::max();

// How the target partition is chosen before each single-vertex assignment:
// by smallest neighbor set |S_j| or by smallest partition |U_j|.
enum class BalanceRule {
  kNeighborSetSize,
  kPartitionSize,
};

const char* to_string(BalanceRule rule);
BalanceRule balance_rule_from_string(const char* name);

}  // namespace parsa
