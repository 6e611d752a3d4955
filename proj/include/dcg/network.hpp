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

#include <span>
#include <utility>
#include <vector>

#include "dcg/ground.hpp"

namespace dcg {

/// Connected undirected communication graph over agents {0..N-1}.
class CommGraph {
 public:
  using Edge = std::pair<AgentId, AgentId>;

  /// Duplicate edges are merged. Throws InvalidGraph for self-loops or
  /// out-of-range endpoints (naming the edge) and Disconnected when some
  /// agent cannot be reached.
  CommGraph(std::size_t num_agents, std::span<const Edge> edges);
  CommGraph(std::size_t num_agents, std::initializer_list<Edge> edges);

  static CommGraph ring(std::size_t n);
  static CommGraph path(std::size_t n);
  static CommGraph complete(std::size_t n);
  /// Agent 0 is the hub.
  static CommGraph star(std::size_t n);

  std::size_t num_agents() const { return adjacency_.size(); }
  /// Sorted neighbour list. Throws UnknownAgent.
  const std::vector<AgentId>& neighbors(AgentId i) const;
  std::vector<Edge> edges() const;
  /// Largest shortest-path hop count over all agent pairs.
  std::size_t diameter() const { return diameter_; }

 private:
  std::vector<std::vector<AgentId>> adjacency_;
  std::size_t diameter_ = 0;
};

/// One synchronous round: agent i's new state is the max-merge of the
/// pre-round states of i and its neighbours.
std::vector<InfoSet> exchange_round(const CommGraph& g, std::span<const InfoSet> states);

/// `rounds` consecutive exchange rounds.
std::vector<InfoSet> exchange_rounds(const CommGraph& g, std::vector<InfoSet> states, std::size_t rounds);

}  // namespace dcg
