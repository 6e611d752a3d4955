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

// Experiment harness: scenario generation, parameter sweeps over (T, K,
// hops, seed) or agent orders, and CSV reports.
//
// Results CSV columns, in this order:
//   algo,T,K,hops,seed,order,utility,bound,success_prob,audit,ms
// Columns that do not apply to a row are left empty. `bound` is filled when
// the optimum is small enough to brute force; `audit` is pass/fail for
// distributed rows; `ms` is wall time, written as 0 when timing is off.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcg/algorithms.hpp"
#include "dcg/scenario.hpp"
#include "json.hpp"

namespace dcg {

enum class GraphKind { ring, path, complete, star };

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);
std::vector<std::pair<AgentId, AgentId>> graph_edges(GraphKind kind, std::size_t n);

struct ScenarioParams {
  double width = 6.0;
  double height = 6.0;
  std::size_t grid_cols = 6;
  std::size_t grid_rows = 6;
  std::vector<double> radii{0.5, 0.6, 0.7, 0.8, 1.5};  ///< one agent per radius
  std::size_t points = 900;
  GraphKind graph = GraphKind::ring;
};

/// Every agent may use every grid placement. Same params and seed give the
/// same document.
nlohmann::json generate_scenario(const ScenarioParams& params, std::uint64_t seed);

enum class Algorithm { distributed, central, sequential, brute };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algo);

/// hops value meaning "use the graph diameter".
inline constexpr std::size_t kHopsDiameter = 0;

struct ExperimentSpec {
  Algorithm algorithm = Algorithm::distributed;
  std::vector<std::size_t> steps{20};
  std::vector<std::size_t> samples{500};
  std::vector<std::size_t> hops{1};
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::vector<AgentId>> orders;  ///< sequential only; empty = identity
  Rounding rounding = Rounding::sample;
  bool timing = true;
  std::size_t threads = 1;

  /// Throws ConfigError for empty sweeps, duplicate seeds, T or K of zero.
  void validate() const;
};

struct ResultRow {
  std::string algo;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> hops;
  std::optional<std::uint64_t> seed;
  std::string order;
  double utility = 0.0;
  std::optional<double> bound;
  std::optional<double> success_prob;
  std::string audit;
  double ms = 0.0;
};

/// One row per sweep cell in spec order: T outermost, then K, hops, seed.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, const Scenario& scenario);

inline constexpr const char* kCsvHeader = "algo,T,K,hops,seed,order,utility,bound,success_prob,audit,ms";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct SensitivityReport {
  std::vector<std::vector<AgentId>> orders;
  std::vector<double> sequential;   ///< utility per order
  std::vector<std::uint64_t> seeds;
  std::vector<double> distributed;  ///< utility per seed
  double sequential_spread = 0.0;   ///< max - min
  double distributed_spread = 0.0;
  double distributed_iqr = 0.0;
};

/// Sequential greedy over every order versus distributed_cg over every seed
/// (cfg.seed is replaced by each seed in turn).
SensitivityReport sequence_sensitivity_report(const Scenario& scenario,
                                              const std::vector<std::vector<AgentId>>& orders,
                                              const RunConfig& cfg, const std::vector<std::uint64_t>& seeds,
                                              std::size_t threads = 1);

/// Columns kind,index,label,utility with kind "sequential" or "distributed".
void write_sensitivity_csv(std::ostream& out, const SensitivityReport& report);

// Summary statistics with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);
double interquartile_range(const std::vector<double>& values);

/// Runs body(k) for k in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

std::string order_to_string(const std::vector<AgentId>& order);

}  // namespace dcg
