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


#include <vector>

#include "doctest.h"
#include "dcg/errors.hpp"
#include "dcg/network.hpp"
#include "support/reference.hpp"

using namespace dcg;

namespace {

using Neighbours = std::vector<AgentId>;

std::vector<InfoSet> random_states(Rng& rng, std::size_t agents, std::size_t n) {
  std::vector<InfoSet> states(agents);
  for (auto& s : states) {
    for (PolicyId p = 0; p < n; ++p) {
      if (rng.uniform() < 0.4) s.add(p, rng.uniform());
    }
  }
  return states;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("neighbors examples") {
  CHECK(CommGraph::ring(5).neighbors(0) == Neighbours{1, 4});
  CHECK(CommGraph::complete(3).neighbors(1) == Neighbours{0, 2});
  CHECK(CommGraph::path(3).neighbors(2) == Neighbours{1});
  CHECK(CommGraph::star(4).neighbors(0) == Neighbours{1, 2, 3});
  CHECK_THROWS_AS(CommGraph::ring(5).neighbors(5), UnknownAgent);
}

TEST_CASE("diameter examples") {
  CHECK(CommGraph::ring(5).diameter() == 2);
  CHECK(CommGraph::complete(6).diameter() == 1);
  CHECK(CommGraph::path(4).diameter() == 3);
  CHECK(CommGraph::star(5).diameter() == 2);
  CHECK(CommGraph(1, {}).diameter() == 0);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(CommGraph(3, {{0, 1}}), Disconnected);
  CHECK_THROWS_AS(CommGraph(3, {{0, 1}, {1, 1}, {1, 2}}), InvalidGraph);
  CHECK_THROWS_AS(CommGraph(3, {{0, 1}, {1, 3}}), InvalidGraph);
  CHECK_THROWS_AS(CommGraph(0, {}), InvalidGraph);
  const CommGraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.neighbors(1) == Neighbours{0, 2});
  CHECK(g.edges() == std::vector<CommGraph::Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("identical states are a fixed point") {
  const InfoSet f{{0, 0.5}, {3, 0.25}};
  const std::vector<InfoSet> states(4, f);
  CHECK(exchange_round(CommGraph::ring(4), states) == states);
}

TEST_CASE("information floods one hop per round along a path") {
  const CommGraph g = CommGraph::path(3);
  std::vector<InfoSet> states{InfoSet{{0, 0.5}}, InfoSet{}, InfoSet{}};
  states = exchange_round(g, states);
  CHECK(states[0].contains(0));
  CHECK(states[1].contains(0));
  CHECK(!states[2].contains(0));
  states = exchange_round(g, states);
  CHECK(states[2].mass(0) == 0.5);
}

TEST_CASE("rounds are synchronous") {
  // With sequential updates agent 2 would already see agent 0's entry
  // after the first round.
  const CommGraph g = CommGraph::path(3);
  const auto next = exchange_round(g, std::vector<InfoSet>{InfoSet{{0, 1.0}}, InfoSet{}, InfoSet{}});
  CHECK(next[2].empty());
}

TEST_CASE("exchange is monotone round by round") {
  Rng rng(31);
  const CommGraph g = CommGraph::ring(6);
  const Partition part{8};
  auto states = random_states(rng, 6, 8);
  for (int round = 0; round < 4; ++round) {
    const auto next = exchange_round(g, states);
    for (std::size_t i = 0; i < 6; ++i) {
      const auto before = to_membership_vector(states[i], part);
      const auto after = to_membership_vector(next[i], part);
      for (std::size_t p = 0; p < 8; ++p) CHECK(after[p] >= before[p]);
    }
    states = next;
  }
}

TEST_CASE("diameter rounds reach max-consensus on every connected graph up to six agents") {
  Rng rng(32);
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& edges : ref::connected_graphs(n)) {
      const CommGraph g(n, edges);
      REQUIRE(g.diameter() == ref::diameter(n, edges));
      const auto initial = random_states(rng, n, 5);
      const InfoSet target = max_merge(initial);
      const auto final_states = exchange_rounds(g, initial, g.diameter());
      bool all = true;
      for (const auto& s : final_states) all = all && s == target;
      CHECK(all);
      if (g.diameter() > 0) {
        // One round fewer is not enough when the only entry starts at an
        // agent of maximal eccentricity.
        bool some_lag = false;
        for (AgentId a = 0; a < n && !some_lag; ++a) {
          std::vector<InfoSet> single(n);
          single[a] = InfoSet{{0, 1.0}};
          for (const auto& s : exchange_rounds(g, single, g.diameter() - 1)) some_lag = some_lag || !s.contains(0);
        }
        CHECK(some_lag);
      }
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 1 + 4 + 38 + 728 + 26704);
}

}  // TEST_SUITE
