// Copyright 2026 The Authors.
//
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

#pragma once

#include <string>
#include <vector>

#include "dcg/algorithms.hpp"

namespace dcg {

struct AuditReport {
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  ///< first few messages only

  bool ok() const { return violation_count == 0; }
  void fail(std::string message);
};

/// Checks a distributed_cg trace against the invariants of the scheme, with
/// x_i(t) the membership vector of agent i and xbar(t) = max_i x_i(t):
///
///  * own-block dominance: block i of x_i(t) >= block i of x_j(t) for all j
///  * own-block mass: 1·x_ii(t) = t/T
///  * staleness: 0 <= (1/N) 1·(xbar(t) - x_i(t)) <= d(G)/T
///  * xbar(t+1) - xbar(t) = (1/T) sum_i 1_{p*_i}
///  * (1/N) 1·(xbar(t+1) - xbar(t)) = 1/T
///  * with hops >= d(G): x_i(t) = xbar(t) for every agent
///  * p*_i and the final choice of agent i lie in block i
///
/// Equalities use kMassTolerance; dominance is exact.
AuditReport audit_distributed(const RunTrace& trace, const Partition& part, const CommGraph& graph);

}  // namespace dcg
