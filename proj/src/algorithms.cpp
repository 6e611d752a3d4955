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

#include "dcg/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dcg/errors.hpp"
#include "dcg/rng.hpp"

namespace dcg {

std::size_t RunConfig::samples_for(AgentId i) const {
  if (samples.empty()) throw InvalidConfig("no sample count configured");
  return samples.size() == 1 ? samples.front() : samples.at(i);
}

std::uint64_t RunConfig::seed_for(AgentId i) const {
  return agent_seeds.empty() ? agent_seed(seed, i) : agent_seeds.at(i);
}

namespace {

void validate(const ValueOracle& f, const Partition& part, const RunConfig& cfg) {
  if (cfg.steps == 0) throw InvalidConfig("T must be at least 1");
  if (f.ground_size() != part.ground_size()) {
    std::ostringstream msg;
    msg << "oracle ground set has " << f.ground_size() << " policies but the partition has "
        << part.ground_size();
    throw InvalidConfig(msg.str());
  }
  const std::size_t n_agents = part.num_agents();
  if (cfg.samples.size() != 1 && cfg.samples.size() != n_agents) {
    throw InvalidConfig("sample counts must be a single value or one per agent");
  }
  for (std::size_t k : cfg.samples) {
    if (k == 0) throw InvalidConfig("every K_i must be at least 1");
  }
  if (!cfg.agent_seeds.empty() && cfg.agent_seeds.size() != n_agents) {
    throw InvalidConfig("agent seeds must be empty or one per agent");
  }
}

std::unique_ptr<ExactExtension> make_exact(const ValueOracle& f, const RunConfig& cfg) {
  if (cfg.gradient != GradientMode::exact) return nullptr;
  return std::make_unique<ExactExtension>(f);
}

GradientEstimate block_gradient(const ValueOracle& f, const ExactExtension* exact, const InfoSet& belief,
                                const PolicyRange& block, const RunConfig& cfg, AgentId agent,
                                std::size_t step) {
  if (exact != nullptr) return exact_grad_block(*exact, belief, block);
  Rng rng = Rng::stream(cfg.seed_for(agent), step, StreamPurpose::gradient);
  return estimate_grad_block(f, belief, block, cfg.samples_for(agent), rng);
}

// Reads block i of `belief`, checks that it carries unit mass and rounds it
// to one policy.
PolicyId round_block(const InfoSet& belief, const PolicyRange& block, const RunConfig& cfg,
                     AgentId agent) {
  std::vector<double> mass(block.size(), 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < block.size(); ++k) {
    mass[k] = belief.mass(block.first + k);
    total += mass[k];
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg << "block of agent " << agent << " ends with mass " << total << " instead of 1";
    throw InfeasibleOutput(msg.str());
  }
  if (cfg.rounding == Rounding::argmax) return block.first + argmax_lowest(mass);
  Rng rng = Rng::stream(cfg.seed_for(agent), cfg.steps, StreamPurpose::rounding);
  return block.first + sample_one_from_block(mass, rng);
}

}  // namespace

RunResult distributed_cg(const ValueOracle& f, const Partition& part, const CommGraph& graph,
                         const RunConfig& cfg) {
  validate(f, part, cfg);
  const std::size_t n_agents = part.num_agents();
  if (graph.num_agents() != n_agents) {
    throw InvalidConfig("graph has " + std::to_string(graph.num_agents()) + " agents, partition has " +
                        std::to_string(n_agents));
  }
  const std::size_t max_hops = std::max<std::size_t>(1, graph.diameter());
  if (cfg.hops < 1 || cfg.hops > max_hops) {
    throw InvalidConfig("hops must be in [1, " + std::to_string(max_hops) + "], got " +
                        std::to_string(cfg.hops));
  }

  const auto exact = make_exact(f, cfg);
  const double step_mass = 1.0 / static_cast<double>(cfg.steps);

  RunResult result;
  RunTrace& trace = result.trace;
  trace.steps = cfg.steps;
  trace.hops = cfg.hops;
  trace.records.reserve(cfg.steps);

  std::vector<InfoSet> state(n_agents);
  for (std::size_t t = 0; t < cfg.steps; ++t) {
    StepRecord rec;
    rec.before = state;
    rec.propagated = state;
    rec.chosen.reserve(n_agents);
    rec.gradients.reserve(n_agents);
    for (AgentId i = 0; i < n_agents; ++i) {
      auto est = block_gradient(f, exact.get(), state[i], part.block(i), cfg, i, t);
      const PolicyId best = est.argmax();
      rec.propagated[i].add(best, step_mass);
      rec.chosen.push_back(best);
      rec.gradients.push_back(std::move(est));
    }
    state = exchange_rounds(graph, rec.propagated, cfg.hops);
    rec.after = state;
    trace.records.push_back(std::move(rec));
  }

  trace.final_states = state;
  for (AgentId i = 0; i < n_agents; ++i) {
    const PolicyId p = round_block(state[i], part.block(i), cfg, i);
    trace.final_choice.push_back(p);
    result.chosen.insert(p);
  }
  trace.utility = f.eval(result.chosen);
  return result;
}

RunResult central_cg(const ValueOracle& f, const Partition& part, const RunConfig& cfg) {
  validate(f, part, cfg);
  const std::size_t n_agents = part.num_agents();
  const auto exact = make_exact(f, cfg);
  const double step_mass = 1.0 / static_cast<double>(cfg.steps);

  RunResult result;
  RunTrace& trace = result.trace;
  trace.steps = cfg.steps;
  trace.hops = 0;
  trace.records.reserve(cfg.steps);

  InfoSet x;
  for (std::size_t t = 0; t < cfg.steps; ++t) {
    StepRecord rec;
    rec.before = {x};
    InfoSet next = x;
    // The per-block argmax is the maximizer of sum_{p in R} w_p over the
    // partition matroid.
    for (AgentId i = 0; i < n_agents; ++i) {
      auto est = block_gradient(f, exact.get(), x, part.block(i), cfg, i, t);
      const PolicyId best = est.argmax();
      next.add(best, step_mass);
      rec.chosen.push_back(best);
      rec.gradients.push_back(std::move(est));
    }
    x = std::move(next);
    rec.propagated = {x};
    rec.after = {x};
    trace.records.push_back(std::move(rec));
  }

  trace.final_states = {x};
  for (AgentId i = 0; i < n_agents; ++i) {
    const PolicyId p = round_block(x, part.block(i), cfg, i);
    trace.final_choice.push_back(p);
    result.chosen.insert(p);
  }
  trace.utility = f.eval(result.chosen);
  return result;
}

PolicySet sequential_greedy(const ValueOracle& f, const Partition& part, std::span<const AgentId> order) {
  const std::size_t n_agents = part.num_agents();
  std::vector<bool> seen(n_agents, false);
  if (order.size() != n_agents) throw InvalidConfig("agent order must list every agent exactly once");
  for (AgentId i : order) {
    if (i >= n_agents || seen[i]) throw InvalidConfig("agent order must be a permutation");
    seen[i] = true;
  }

  PolicySet chosen;
  double current = f.eval(chosen);
  for (AgentId i : order) {
    const auto& block = part.block(i);
    std::vector<double> gain(block.size());
    for (std::size_t k = 0; k < block.size(); ++k) gain[k] = f.eval(chosen.with(block.first + k)) - current;
    const PolicyId best = block.first + argmax_lowest(gain);
    chosen.insert(best);
    current = f.eval(chosen);
  }
  return chosen;
}

OptimumResult brute_force_opt(const ValueOracle& f, const Partition& part) {
  std::uint64_t combos = 1;
  for (const auto& b : part.blocks()) {
    if (combos > kMaxBruteForceCombinations / b.size()) {
      throw SearchSpaceTooLarge("brute force needs more than " + std::to_string(kMaxBruteForceCombinations) +
                                " combinations");
    }
    combos *= b.size();
  }

  const std::size_t n_agents = part.num_agents();
  std::vector<std::size_t> index(n_agents, 0);
  OptimumResult best;
  bool have = false;
  std::vector<PolicyId> ids(n_agents);
  for (;;) {
    for (AgentId i = 0; i < n_agents; ++i) ids[i] = part.block(i).first + index[i];
    PolicySet s(ids);
    const double v = f.eval(s);
    if (!have || v > best.value) {
      best.set = std::move(s);
      best.value = v;
      have = true;
    }
    // Odometer with the last block fastest: lexicographic order.
    std::size_t pos = n_agents;
    while (pos > 0) {
      --pos;
      if (++index[pos] < part.block(pos).size()) break;
      index[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

BoundResult theorem_bound(std::size_t num_agents, std::size_t diameter, std::size_t steps, double f_star) {
  if (steps == 0) throw std::invalid_argument("theorem_bound: T must be >= 1");
  const double n = static_cast<double>(num_agents);
  const double d = static_cast<double>(diameter);
  const double t = static_cast<double>(steps);
  const double factor = 1.0 - 1.0 / std::numbers::e;
  BoundResult r;
  r.gap_factor = 1.0 - (2.0 * n * n * d + 0.5 * n * n + n) / t;
  r.improved_gap_factor = 1.0 - (0.5 * n * n + n) / t;
  r.bound = factor * r.gap_factor * f_star;
  r.improved_bound = factor * r.improved_gap_factor * f_star;
  return r;
}

SuccessProbability success_probability(std::size_t steps, std::span<const std::size_t> samples,
                                       std::span<const std::size_t> block_sizes) {
  if (steps == 0) throw std::invalid_argument("success_probability: T must be >= 1");
  if (block_sizes.empty()) throw std::invalid_argument("success_probability: no blocks");
  if (samples.size() != 1 && samples.size() != block_sizes.size()) {
    throw std::invalid_argument("success_probability: one sample count or one per agent");
  }
  const double t = static_cast<double>(steps);
  const double scale = 8.0 * t * t;

  double log_product = 0.0;
  bool zero = false;
  std::size_t n = 0;
  std::size_t k_min = samples.front();
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    const std::size_t k = samples.size() == 1 ? samples.front() : samples[i];
    k_min = std::min(k_min, k);
    n += block_sizes[i];
    const double fail = 2.0 * std::exp(-static_cast<double>(k) / scale);
    if (fail >= 1.0) {
      zero = true;
    } else {
      log_product += static_cast<double>(block_sizes[i]) * std::log1p(-fail);
    }
  }

  SuccessProbability r;
  r.product = zero ? 0.0 : std::exp(t * log_product);
  r.simplified = 1.0 - 2.0 * t * static_cast<double>(n) * std::exp(-static_cast<double>(k_min) / scale);
  if (r.simplified > r.product + 1e-12) {
    throw std::logic_error("simplified success probability exceeds the product form");
  }
  return r;
}

}  // namespace dcg
