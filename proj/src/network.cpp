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

#include "dcg/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dcg/errors.hpp"

namespace dcg {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const std::vector<std::vector<AgentId>>& adj, AgentId source) {
  std::vector<std::size_t> dist(adj.size(), kUnreached);
  std::deque<AgentId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const AgentId u = queue.front();
    queue.pop_front();
    for (AgentId v : adj[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

CommGraph::CommGraph(std::size_t num_agents, std::span<const Edge> edges) : adjacency_(num_agents) {
  if (num_agents == 0) throw InvalidGraph("graph needs at least one agent");
  for (const auto& [i, j] : edges) {
    if (i >= num_agents || j >= num_agents || i == j) {
      std::ostringstream msg;
      msg << "edge [" << i << ", " << j << "] ";
      msg << (i == j ? "is a self-loop" : "references an unknown agent");
      msg << " (agents are 0.." << num_agents - 1 << ")";
      throw InvalidGraph(msg.str());
    }
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  for (AgentId s = 0; s < num_agents; ++s) {
    const auto dist = bfs(adjacency_, s);
    for (AgentId t = 0; t < num_agents; ++t) {
      if (dist[t] == kUnreached) {
        std::ostringstream msg;
        msg << "graph is disconnected: agent " << t << " is unreachable from agent " << s;
        throw Disconnected(msg.str());
      }
      diameter_ = std::max(diameter_, dist[t]);
    }
  }
}

CommGraph::CommGraph(std::size_t num_agents, std::initializer_list<Edge> edges)
    : CommGraph(num_agents, std::span<const Edge>(edges.begin(), edges.size())) {}

CommGraph CommGraph::ring(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n > 2) e.emplace_back(n - 1, 0);
  return CommGraph(n, e);
}

CommGraph CommGraph::path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return CommGraph(n, e);
}

CommGraph CommGraph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return CommGraph(n, e);
}

CommGraph CommGraph::star(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, i);
  return CommGraph(n, e);
}

const std::vector<AgentId>& CommGraph::neighbors(AgentId i) const {
  if (i >= adjacency_.size()) {
    throw UnknownAgent("agent " + std::to_string(i) + " not in graph of " +
                       std::to_string(adjacency_.size()) + " agents");
  }
  return adjacency_[i];
}

std::vector<CommGraph::Edge> CommGraph::edges() const {
  std::vector<Edge> out;
  for (AgentId i = 0; i < adjacency_.size(); ++i) {
    for (AgentId j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<InfoSet> exchange_round(const CommGraph& g, std::span<const InfoSet> states) {
  if (states.size() != g.num_agents()) throw std::invalid_argument("one state per agent required");
  std::vector<InfoSet> next;
  next.reserve(states.size());
  std::vector<InfoSet> group;
  for (AgentId i = 0; i < states.size(); ++i) {
    group.clear();
    group.push_back(states[i]);
    for (AgentId j : g.neighbors(i)) group.push_back(states[j]);
    next.push_back(max_merge(group));
  }
  return next;
}

std::vector<InfoSet> exchange_rounds(const CommGraph& g, std::vector<InfoSet> states, std::size_t rounds) {
  for (std::size_t r = 0; r < rounds; ++r) states = exchange_round(g, states);
  return states;
}

}  // namespace dcg
