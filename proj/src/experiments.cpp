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

#include "dcg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "dcg/audit.hpp"
#include "dcg/errors.hpp"

namespace dcg {

using nlohmann::json;

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "ring") return GraphKind::ring;
  if (name == "path") return GraphKind::path;
  if (name == "complete") return GraphKind::complete;
  if (name == "star") return GraphKind::star;
  throw ConfigError("unknown graph kind \"" + name + "\" (ring, path, complete, star)");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::ring: return "ring";
    case GraphKind::path: return "path";
    case GraphKind::complete: return "complete";
    case GraphKind::star: return "star";
  }
  return "?";
}

std::vector<std::pair<AgentId, AgentId>> graph_edges(GraphKind kind, std::size_t n) {
  switch (kind) {
    case GraphKind::ring: return CommGraph::ring(n).edges();
    case GraphKind::path: return CommGraph::path(n).edges();
    case GraphKind::complete: return CommGraph::complete(n).edges();
    case GraphKind::star: return CommGraph::star(n).edges();
  }
  return {};
}

json generate_scenario(const ScenarioParams& params, std::uint64_t seed) {
  if (params.radii.empty()) throw ConfigError("scenario needs at least one agent");
  if (params.grid_cols == 0 || params.grid_rows == 0) throw ConfigError("grid must be non-empty");
  if (params.width <= 0 || params.height <= 0) throw ConfigError("field dimensions must be positive");

  Scenario s;
  s.width = params.width;
  s.height = params.height;
  s.placements = grid_placements(params.width, params.height, params.grid_cols, params.grid_rows);
  s.interest_points = uniform_points(params.width, params.height, params.points, seed);
  for (double r : params.radii) {
    AgentSpec a;
    a.radius = r;
    a.allowed.resize(s.placements.size());
    std::iota(a.allowed.begin(), a.allowed.end(), std::size_t{0});
    s.agents.push_back(std::move(a));
  }
  s.edges = graph_edges(params.graph, params.radii.size());

  json doc = scenario_to_json(s);
  doc["grid"] = {params.grid_cols, params.grid_rows};
  return doc;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "distributed") return Algorithm::distributed;
  if (name == "central") return Algorithm::central;
  if (name == "sequential") return Algorithm::sequential;
  if (name == "brute") return Algorithm::brute;
  throw ConfigError("unknown algorithm \"" + name + "\" (distributed, central, sequential, brute)");
}

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::distributed: return "distributed";
    case Algorithm::central: return "central";
    case Algorithm::sequential: return "sequential";
    case Algorithm::brute: return "brute";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  auto non_empty = [](const auto& v, const char* what) {
    if (v.empty()) throw ConfigError(std::string("sweep list ") + what + " is empty");
  };
  non_empty(steps, "T");
  non_empty(samples, "K");
  non_empty(hops, "hops");
  non_empty(seeds, "seeds");
  for (auto t : steps) {
    if (t == 0) throw ConfigError("T must be at least 1");
  }
  for (auto k : samples) {
    if (k == 0) throw ConfigError("K must be at least 1");
  }
  std::set<std::uint64_t> distinct(seeds.begin(), seeds.end());
  if (distinct.size() != seeds.size()) throw ConfigError("seeds must be distinct");
  if (threads == 0) throw ConfigError("threads must be at least 1");
}

std::string order_to_string(const std::vector<AgentId>& order) {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) s += '-';
    s += std::to_string(order[k]);
  }
  return s;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, count));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        try {
          body(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<double> try_optimum(const ValueOracle& f, const Partition& part) {
  try {
    return brute_force_opt(f, part).value;
  } catch (const SearchSpaceTooLarge&) {
    return std::nullopt;
  }
}

struct Cell {
  std::size_t steps = 0;
  std::size_t samples = 0;
  std::size_t hops = 0;
  std::uint64_t seed = 0;
  std::size_t order = 0;
};

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, const Scenario& scenario) {
  spec.validate();
  const Partition part = scenario.partition();
  const CoverageOracle oracle = scenario.oracle();
  const CommGraph graph(part.num_agents(), scenario.edges);
  const std::size_t n_agents = part.num_agents();
  const auto block_sizes = part.block_sizes();

  std::vector<Cell> cells;
  std::vector<std::vector<AgentId>> orders = spec.orders;
  switch (spec.algorithm) {
    case Algorithm::distributed:
      for (auto t : spec.steps)
        for (auto k : spec.samples)
          for (auto h : spec.hops)
            for (auto s : spec.seeds) cells.push_back({t, k, h == kHopsDiameter ? std::max<std::size_t>(1, graph.diameter()) : h, s, 0});
      break;
    case Algorithm::central:
      for (auto t : spec.steps)
        for (auto k : spec.samples)
          for (auto s : spec.seeds) cells.push_back({t, k, 0, s, 0});
      break;
    case Algorithm::sequential:
      if (orders.empty()) {
        orders.emplace_back(n_agents);
        std::iota(orders.back().begin(), orders.back().end(), AgentId{0});
      }
      for (std::size_t o = 0; o < orders.size(); ++o) cells.push_back({0, 0, 0, 0, o});
      break;
    case Algorithm::brute:
      cells.push_back({});
      break;
  }

  const auto f_star = spec.algorithm == Algorithm::brute ? std::nullopt : try_optimum(oracle, part);
  std::vector<ResultRow> rows(cells.size());

  parallel_for(cells.size(), spec.threads, [&](std::size_t idx) {
    const Cell& cell = cells[idx];
    ResultRow row;
    row.algo = to_string(spec.algorithm);
    const auto start = Clock::now();
    switch (spec.algorithm) {
      case Algorithm::distributed:
      case Algorithm::central: {
        RunConfig cfg;
        cfg.steps = cell.steps;
        cfg.samples = {cell.samples};
        cfg.hops = spec.algorithm == Algorithm::distributed ? cell.hops : 1;
        cfg.rounding = spec.rounding;
        cfg.seed = cell.seed;
        const RunResult run = spec.algorithm == Algorithm::distributed ? distributed_cg(oracle, part, graph, cfg)
                                                                       : central_cg(oracle, part, cfg);
        row.steps = cell.steps;
        row.samples = cell.samples;
        row.seed = cell.seed;
        row.utility = run.trace.utility;
        const std::size_t samples[] = {cell.samples};
        row.success_prob = success_probability(cell.steps, samples, block_sizes).product;
        if (spec.algorithm == Algorithm::distributed) {
          row.hops = cell.hops;
          row.audit = audit_distributed(run.trace, part, graph).ok() ? "pass" : "fail";
        }
        if (f_star) {
          const auto b = theorem_bound(n_agents, graph.diameter(), cell.steps, *f_star);
          const bool improved = spec.algorithm == Algorithm::central || cell.hops >= graph.diameter();
          row.bound = improved ? b.improved_bound : b.bound;
        }
        break;
      }
      case Algorithm::sequential: {
        const auto& order = orders[cell.order];
        row.order = order_to_string(order);
        row.utility = oracle.eval(sequential_greedy(oracle, part, order));
        if (f_star) row.bound = 0.5 * *f_star;
        break;
      }
      case Algorithm::brute:
        row.utility = brute_force_opt(oracle, part).value;
        break;
    }
    row.ms = spec.timing ? elapsed_ms(start) : 0.0;
    rows[idx] = std::move(row);
  });
  return rows;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fmt_double(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    out << r.algo << ',' << opt(r.steps) << ',' << opt(r.samples) << ',' << opt(r.hops) << ','
        << opt(r.seed) << ',' << r.order << ',' << fmt_double(r.utility) << ',' << opt(r.bound) << ','
        << opt(r.success_prob) << ',' << r.audit << ',' << ms << '\n';
  }
}

// ---------------------------------------------------------------------------

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

double interquartile_range(const std::vector<double>& values) {
  return quantile(values, 0.75) - quantile(values, 0.25);
}

SensitivityReport sequence_sensitivity_report(const Scenario& scenario,
                                              const std::vector<std::vector<AgentId>>& orders,
                                              const RunConfig& cfg, const std::vector<std::uint64_t>& seeds,
                                              std::size_t threads) {
  if (orders.empty() || seeds.empty()) throw ConfigError("sensitivity needs at least one order and one seed");
  const Partition part = scenario.partition();
  const CoverageOracle oracle = scenario.oracle();
  const CommGraph graph(part.num_agents(), scenario.edges);

  SensitivityReport report;
  report.orders = orders;
  report.seeds = seeds;
  for (const auto& order : orders) report.sequential.push_back(oracle.eval(sequential_greedy(oracle, part, order)));

  report.distributed.resize(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t k) {
    RunConfig run_cfg = cfg;
    run_cfg.seed = seeds[k];
    report.distributed[k] = distributed_cg(oracle, part, graph, run_cfg).trace.utility;
  });

  auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  report.sequential_spread = spread(report.sequential);
  report.distributed_spread = spread(report.distributed);
  report.distributed_iqr = interquartile_range(report.distributed);
  return report;
}

void write_sensitivity_csv(std::ostream& out, const SensitivityReport& report) {
  out << "kind,index,label,utility\n";
  for (std::size_t k = 0; k < report.orders.size(); ++k) {
    out << "sequential," << k << ',' << order_to_string(report.orders[k]) << ','
        << fmt_double(report.sequential[k]) << '\n';
  }
  for (std::size_t k = 0; k < report.seeds.size(); ++k) {
    out << "distributed," << k << ',' << report.seeds[k] << ',' << fmt_double(report.distributed[k]) << '\n';
  }
}

}  // namespace dcg
