// Copyright 2026 The pcst Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCST_ORACLE_HPP_
#define PCST_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "pcst/instance.hpp"
#include "pcst/rational.hpp"

namespace pcst {

struct ExactResult {
  Rational optimum;
  Tree witness;
  std::uint64_t explored = 0;  // connected vertex subsets visited
};

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultOracleLimit = 18;

// Visits every nonempty vertex subset whose induced subgraph is connected,
// exactly once, as a bitmask over vertex ids. Requires n ≤ 63.
void ForEachConnectedSubset(const Instance& instance, const std::function<void(std::uint64_t)>& visit);

// Exact optimum by exhaustion: for each connected vertex subset S, the best
// tree spanning exactly S is a minimum spanning tree of G[S]. Ties go to the
// lexicographically smallest sorted vertex list. Throws OracleLimitError when
// n > limit_n.
ExactResult ExactSolve(const Instance& instance, int limit_n = kDefaultOracleLimit);

}  // namespace pcst

#endif  // PCST_ORACLE_HPP_
