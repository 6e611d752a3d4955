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

// Submodular maximization under the partition matroid "one policy per agent":
//
//  * distributed_cg  - distributed continuous greedy. Each agent keeps an
//    information set, moves 1/T of mass onto the policy of its own block with
//    the largest sampled gradient and max-merges with its neighbours.
//  * central_cg      - the centralized continuous greedy baseline.
//  * sequential_greedy, brute_force_opt - discrete baselines.
//  * theorem_bound, success_probability - the approximation guarantee of the
//    distributed scheme and the probability it holds with.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcg/ground.hpp"
#include "dcg/multilinear.hpp"
#include "dcg/network.hpp"
#include "dcg/oracle.hpp"

namespace dcg {

enum class Rounding {
  sample,  ///< draw one policy per block with probability equal to its mass
  argmax,  ///< highest-mass policy per block, ties to the lowest id
};

enum class GradientMode {
  sampled,  ///< Monte-Carlo with K_i samples
  exact,    ///< vertex enumeration, n <= kMaxExactGroundSize
};

struct RunConfig {
  std::size_t steps = 1;              ///< T
  std::vector<std::size_t> samples{1};  ///< K_i, one per agent or a single shared value
  std::size_t hops = 1;               ///< exchange rounds per step, in [1, max(1, d(G))]
  Rounding rounding = Rounding::sample;
  GradientMode gradient = GradientMode::sampled;
  std::uint64_t seed = 0;
  /// Optional per-agent stream seeds; derived from `seed` when empty.
  std::vector<std::uint64_t> agent_seeds;

  std::size_t samples_for(AgentId i) const;
  std::uint64_t seed_for(AgentId i) const;
};

/// One step t -> t+1. For central runs every per-agent vector holds a single
/// entry, the global state.
struct StepRecord {
  std::vector<InfoSet> before;      ///< F_i(t)
  std::vector<InfoSet> propagated;  ///< F_i(t) ⊕ {(p*_i, 1/T)}
  std::vector<InfoSet> after;       ///< F_i(t+1)
  std::vector<PolicyId> chosen;     ///< p*_i, one per agent
  std::vector<GradientEstimate> gradients;
};

struct RunTrace {
  std::size_t steps = 0;
  std::size_t hops = 0;
  std::vector<StepRecord> records;
  std::vector<InfoSet> final_states;
  std::vector<PolicyId> final_choice;  ///< one policy per agent
  double utility = 0.0;                ///< f(output)
};

struct RunResult {
  PolicySet chosen;
  RunTrace trace;
};

/// Throws InvalidConfig for T = 0, K_i = 0, hops outside [1, max(1, d(G))]
/// or a partition/graph/oracle size mismatch, and InfeasibleOutput if a
/// block does not end with mass one.
RunResult distributed_cg(const ValueOracle& f, const Partition& part, const CommGraph& graph,
                         const RunConfig& cfg);

/// Single global membership vector; block i's sample sets come from the
/// same stream agent i uses in distributed_cg, so on a complete graph with
/// one hop both produce identical traces. `cfg.hops` is ignored.
RunResult central_cg(const ValueOracle& f, const Partition& part, const RunConfig& cfg);

/// Agents in `order` pick the policy of their block with the largest
/// marginal gain given the earlier picks; ties go to the lowest id.
PolicySet sequential_greedy(const ValueOracle& f, const Partition& part, std::span<const AgentId> order);

struct OptimumResult {
  PolicySet set;
  double value = 0.0;
};

inline constexpr std::uint64_t kMaxBruteForceCombinations = 1'000'000;

/// Exhaustive search over one policy per block. Ties keep the
/// lexicographically smallest choice. Throws SearchSpaceTooLarge.
OptimumResult brute_force_opt(const ValueOracle& f, const Partition& part);

struct BoundResult {
  double gap_factor = 0.0;  ///< 1 - (2N^2 d + N^2/2 + N)/T
  double bound = 0.0;       ///< (1 - 1/e) * gap_factor * f*
  double improved_gap_factor = 0.0;  ///< 1 - (N^2/2 + N)/T, for hops = d(G)
  double improved_bound = 0.0;

  bool vacuous() const { return bound <= 0.0; }
  bool improved_vacuous() const { return improved_bound <= 0.0; }
};

BoundResult theorem_bound(std::size_t num_agents, std::size_t diameter, std::size_t steps, double f_star);

struct SuccessProbability {
  double product = 0.0;     ///< (prod_i (1 - 2 e^{-K_i/(8T^2)})^{|P_i|})^T
  double simplified = 0.0;  ///< 1 - 2 T n e^{-min K / (8T^2)}
};

/// Factors below zero are clamped to zero. Throws std::logic_error if the
/// simplified form ever exceeds the product form.
SuccessProbability success_probability(std::size_t steps, std::span<const std::size_t> samples,
                                       std::span<const std::size_t> block_sizes);

}  // namespace dcg
