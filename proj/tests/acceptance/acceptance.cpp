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


// Acceptance suite. Each criterion prints one line:
//
//   criterion <n> [PASS|FAIL] <name>: <measured values>
//
// Usage: dcg_acceptance [n ...]   (no arguments runs every criterion)
// The exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dcg/algorithms.hpp"
#include "dcg/audit.hpp"
#include "dcg/experiments.hpp"
#include "dcg/multilinear.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace dcg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

RunConfig config(std::size_t steps, std::size_t samples, std::uint64_t seed, std::size_t hops) {
  RunConfig cfg;
  cfg.steps = steps;
  cfg.samples = {samples};
  cfg.seed = seed;
  cfg.hops = hops;
  return cfg;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// 1. Every invariant holds on every step of >= 200 runs.
Outcome invariants() {
  struct Topology {
    const char* name;
    CommGraph graph;
  };
  const std::vector<Topology> graphs{{"ring-5", CommGraph::ring(5)},
                                     {"path-4", CommGraph::path(4)},
                                     {"complete-4", CommGraph::complete(4)},
                                     {"star-5", CommGraph::star(5)}};
  std::size_t runs = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first;
  for (const auto& topo : graphs) {
    const std::size_t n = topo.graph.num_agents();
    const Scenario s = fixtures::random_coverage(100 + n, std::vector<std::size_t>(n, 3), 60);
    const auto f = s.oracle();
    const Partition part = s.partition();
    std::vector<std::size_t> hop_values{1};
    if (topo.graph.diameter() > 1) hop_values.push_back(topo.graph.diameter());
    for (std::size_t steps : {5, 20, 50}) {
      for (std::size_t hops : hop_values) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          const auto run = distributed_cg(f, part, topo.graph, config(steps, 50, seed, hops));
          const auto report = audit_distributed(run.trace, part, topo.graph);
          ++runs;
          checks += report.checks;
          violations += report.violation_count;
          if (!report.ok() && first.empty()) {
            first = std::string(topo.name) + " T=" + std::to_string(steps) + ": " + report.violations.front();
          }
        }
      }
    }
  }
  Outcome out;
  out.pass = runs >= 200 && violations == 0;
  out.detail = std::to_string(runs) + " runs, " + std::to_string(checks) + " checks, " +
               std::to_string(violations) + " violations" + (first.empty() ? "" : " (first: " + first + ")");
  return out;
}

// 2. Exact gradient = finite difference of exact F = enumeration of the
// expectation; Hessian entries are non-positive and bounded by f(P).
Outcome gradient_oracle() {
  const std::vector<std::vector<std::size_t>> shapes{{4, 4, 4}, {3, 3, 3, 3}, {2, 3, 2, 3}, {5, 5}, {6, 6},
                                                     {3, 4, 3}, {2, 2, 2, 2, 2}, {4, 3}, {3, 3}, {4, 4, 3}};
  double worst_fd = 0.0;
  double worst_enum = 0.0;
  double worst_hess = -1e300;
  double worst_ratio = 0.0;
  bool ok = true;
  Rng rng(202);
  for (std::size_t inst = 0; inst < 20; ++inst) {
    const auto& shape = shapes[inst % shapes.size()];
    const Scenario s = fixtures::random_coverage(300 + inst, shape, 50);
    const auto f = s.oracle();
    const std::size_t n = f.ground_size();
    const auto table = ref::tabulate(f);
    const ExactExtension ext(f);
    const double f_all = table(table.f.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> x(n);
      for (double& v : x) v = rng.uniform();
      const double fx = ext.value(x);
      for (std::size_t p = 0; p < n; ++p) {
        const double h = 1e-6;
        std::vector<double> y = x;
        const double sign = x[p] + h <= 1.0 ? 1.0 : -1.0;
        y[p] += sign * h;
        const double fd = sign * (ext.value(y) - fx) / h;
        const double g = ext.gradient(x, p);
        const double e = ref::gradient(table, x, p);
        worst_fd = std::max(worst_fd, std::abs(g - fd));
        worst_enum = std::max(worst_enum, std::abs(g - e) / std::max(1.0, std::abs(e)));
        for (std::size_t q = p + 1; q < n; ++q) {
          const double hess = ext.hessian(x, p, q);
          worst_hess = std::max(worst_hess, hess);
          if (f_all > 0) worst_ratio = std::max(worst_ratio, std::abs(hess) / f_all);
        }
      }
    }
  }
  ok = worst_fd <= 1e-4 && worst_enum <= 1e-12 && worst_hess <= 1e-12 && worst_ratio <= 1.0 + 1e-12;
  return {ok, "20 instances; max |grad - FD| = " + fmt(worst_fd, 3) + " (tol 1e-4), max rel |grad - enum| = " +
                  fmt(worst_enum, 3) + ", max hessian = " + fmt(worst_hess, 3) + ", max |hessian|/f(P) = " +
                  fmt(worst_ratio, 3)};
}

// 3. Frequency of gradient errors above f*/(2T) with the Hoeffding sample size.
Outcome concentration() {
  const Scenario s = fixtures::random_coverage(401, {3, 3, 3}, 60);
  const auto f = s.oracle();
  const Partition part = s.partition();
  const ExactExtension ext(f);
  const double f_star = brute_force_opt(f, part).value;
  const std::size_t steps = 10;
  const std::size_t k = required_samples(steps, 0.05);
  const double tol = f_star / (2.0 * static_cast<double>(steps));
  Rng rng(402);
  std::size_t estimates = 0;
  std::size_t misses = 0;
  double worst = 0.0;
  for (std::size_t trial = 0; trial < 2000; ++trial) {
    const double mass = std::floor(rng.uniform() * static_cast<double>(steps)) / static_cast<double>(steps);
    const InfoSet belief = fixtures::random_belief(part, mass, rng);
    const AgentId agent = static_cast<AgentId>(rng.uniform() * 3.0);
    Rng stream = Rng::stream(403, trial, StreamPurpose::gradient);
    const auto est = estimate_grad_block(f, belief, part.block(agent), k, stream);
    const auto x = to_membership_vector(belief, part);
    for (PolicyId p = part.block(agent).first; p < part.block(agent).last; ++p) {
      const double err = std::abs(est.at(p) - ext.gradient(x, p));
      worst = std::max(worst, err);
      ++estimates;
      if (err > tol) ++misses;
    }
  }
  const double freq = static_cast<double>(misses) / static_cast<double>(estimates);
  return {freq <= 0.07, "K = " + std::to_string(k) + ", f* = " + fmt(f_star) + ", " + std::to_string(misses) + "/" +
                            std::to_string(estimates) + " estimates beyond f*/(2T) = " + fmt(tol) +
                            ", frequency " + fmt(freq) + " (limit 0.07), max error " + fmt(worst)};
}

// 4. Mean utility against the approximation guarantee.
Outcome suboptimality_bound() {
  const Scenario s = fixtures::random_coverage(501, {3, 3, 3}, 60);
  const auto f = s.oracle();
  const Partition part = s.partition();
  const CommGraph g = CommGraph::path(3);
  const double f_star = brute_force_opt(f, part).value;

  std::vector<double> full(200);
  parallel_for(full.size(), 1, [&](std::size_t k) {
    full[k] = distributed_cg(f, part, g, config(200, 5000, k + 1, g.diameter())).trace.utility;
  });
  const auto improved = theorem_bound(3, g.diameter(), 200, f_star);
  const double m_full = mean(full);

  std::vector<double> single(20);
  for (std::size_t k = 0; k < single.size(); ++k) {
    single[k] = distributed_cg(f, part, g, config(1200, 5000, k + 1, 1)).trace.utility;
  }
  const auto printed = theorem_bound(3, g.diameter(), 1200, f_star);
  const double m_single = mean(single);

  const bool ok = m_full >= improved.improved_bound && m_single >= printed.bound;
  return {ok, "f* = " + fmt(f_star) + "; hops=d, T=200, K=5000, 200 seeds: mean " + fmt(m_full) +
                  " >= improved bound " + fmt(improved.improved_bound) + "; hops=1, T=1200, K=5000, 20 seeds: mean " +
                  fmt(m_single) + " >= printed bound " + fmt(printed.bound)};
}

// 5. Sequential greedy is within half of the optimum for every order.
Outcome sequential_half() {
  const std::vector<std::vector<std::size_t>> shapes{{3, 3},    {4, 2},       {2, 2, 2},    {3, 3, 3},   {4, 3, 2},
                                                     {2, 2, 2, 2}, {3, 3, 2, 3}, {2, 3, 2, 3}, {3, 2, 2, 2}, {3, 3, 3, 3}};
  double worst = 1e300;
  std::size_t checks = 0;
  bool ok = true;
  for (std::size_t inst = 0; inst < shapes.size(); ++inst) {
    const auto& shape = shapes[inst];
    const Scenario s = fixtures::random_coverage(600 + inst, shape, 50);
    const auto f = s.oracle();
    const auto table = ref::tabulate(f);
    const Partition part = s.partition();
    const double f_star = ref::best_feasible(table, shape).second;
    ok = ok && brute_force_opt(f, part).value == f_star;
    for (const auto& order : ref::permutations(shape.size())) {
      const double v = f.eval(sequential_greedy(f, part, order));
      ++checks;
      if (f_star > 0) worst = std::min(worst, v / f_star);
      ok = ok && v >= 0.5 * f_star;
    }
  }
  return {ok, "10 fixtures, " + std::to_string(checks) + " orders, worst f(SG)/f* = " + fmt(worst)};
}

// 6. The two-cluster example.
Outcome two_cluster() {
  const Scenario s = fixtures::two_cluster();
  const auto f = s.oracle();
  const Partition part = s.partition();
  const CommGraph g(2, s.edges);
  const double blue_first = f.eval(sequential_greedy(f, part, fixtures::kBlueFirst));
  const double orange_first = f.eval(sequential_greedy(f, part, fixtures::kOrangeFirst));
  const double opt = brute_force_opt(f, part).value;
  std::vector<double> utils(100);
  for (std::size_t k = 0; k < utils.size(); ++k) {
    utils[k] = distributed_cg(f, part, g, config(100, 2000, k + 1, 1)).trace.utility;
  }
  const double m = mean(utils);
  const bool ok = blue_first == 10.0 && orange_first == 13.0 && opt == 13.0 && m >= 12.0;
  return {ok, "blue-first " + fmt(blue_first) + ", orange-first " + fmt(orange_first) + ", OPT " + fmt(opt) +
                  ", distributed mean over 100 seeds " + fmt(m) + " (limit 12)"};
}

std::vector<std::uint64_t> twenty_seeds() {
  std::vector<std::uint64_t> seeds(20);
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{1});
  return seeds;
}

std::vector<double> utilities(const Scenario& s, std::size_t steps, std::size_t samples) {
  ExperimentSpec spec;
  spec.steps = {steps};
  spec.samples = {samples};
  spec.seeds = twenty_seeds();
  spec.timing = false;
  std::vector<double> out;
  for (const auto& row : run_experiment(spec, s)) {
    if (row.audit != "pass") throw std::runtime_error("invariant audit failed in a paper-scale run");
    out.push_back(row.utility);
  }
  return out;
}

// 7. Median utility grows with T and K on the paper-scale scenario.
Outcome table2_trend() {
  const Scenario s = fixtures::paper_scale(1);
  std::string detail = "medians over 20 seeds; K=500:";
  bool ok = true;
  double prev = -1.0;
  for (std::size_t steps : {1, 5, 10, 20}) {
    const double m = median(utilities(s, steps, 500));
    detail += " T=" + std::to_string(steps) + ":" + fmt(m, 6);
    ok = ok && m >= prev;
    prev = m;
  }
  detail += "; T=20:";
  prev = -1.0;
  for (std::size_t k : {10, 100, 500}) {
    const double m = median(utilities(s, 20, k));
    detail += " K=" + std::to_string(k) + ":" + fmt(m, 6);
    ok = ok && m >= prev;
    prev = m;
  }
  const auto t1_k10 = utilities(s, 1, 10);
  const auto t1_k100 = utilities(s, 1, 100);
  const auto t1_k500 = utilities(s, 1, 500);
  const bool constant = t1_k10 == t1_k100 && t1_k100 == t1_k500;
  detail += std::string("; T=1 constant across K per seed: ") + (constant ? "yes" : "no");
  return {ok && constant, detail};
}

// 8. Order sensitivity of sequential greedy versus seed spread of the
// distributed scheme.
Outcome sequence_sensitivity() {
  const Scenario s = fixtures::paper_scale(1);
  RunConfig cfg = config(20, 500, 0, 1);
  const auto report = sequence_sensitivity_report(s, fixtures::sequence_cases(), cfg, twenty_seeds());
  std::string seq;
  for (double v : report.sequential) seq += (seq.empty() ? "" : " ") + fmt(v, 6);
  const bool ok = report.sequential_spread > 0.0 && report.sequential_spread > report.distributed_iqr;
  return {ok, "sequential by case [" + seq + "], spread " + fmt(report.sequential_spread, 6) +
                  "; distributed median " + fmt(median(report.distributed), 6) + ", IQR " +
                  fmt(report.distributed_iqr, 6) + ", spread " + fmt(report.distributed_spread, 6)};
}

// 9. Block rounding inequality by exact enumeration.
Outcome rounding_inequality() {
  Rng rng(901);
  const std::vector<std::vector<std::size_t>> shapes{{4, 3, 3}, {3, 3, 3}, {5, 5}, {2, 4, 4}, {3, 2, 2, 3}};
  std::size_t violations = 0;
  double min_gap = 1e300;
  double worst_cross = 0.0;
  for (std::size_t pair = 0; pair < 50; ++pair) {
    const auto& shape = shapes[pair % shapes.size()];
    const Scenario s = fixtures::random_coverage(900 + pair, shape, 50);
    const auto f = s.oracle();
    const auto table = ref::tabulate(f);
    const Partition part = s.partition();
    const AgentId agent = static_cast<AgentId>(rng.uniform() * static_cast<double>(shape.size()));
    const auto& block = part.block(agent);
    std::vector<double> x(block.size());
    double total = 0.0;
    for (double& v : x) total += (v = rng.uniform());
    for (double& v : x) v /= total;
    std::vector<double> y(f.ground_size(), 0.0);
    const bool fixed_set = pair % 2 == 0;
    for (PolicyId p = 0; p < y.size(); ++p) {
      if (block.contains(p)) continue;
      y[p] = fixed_set ? (rng.uniform() < 0.3 ? 1.0 : 0.0) : rng.uniform();
    }
    const auto [independent, single] = ref::rounding_sides(table, block.first, block.last, x, y);
    if (independent > single + 1e-9) ++violations;
    min_gap = std::min(min_gap, single - independent);
    std::vector<double> joint = y;
    for (std::size_t k = 0; k < x.size(); ++k) joint[block.first + k] = x[k];
    worst_cross = std::max(worst_cross, std::abs(exact_F(f, joint) - independent));
  }
  return {violations == 0 && worst_cross <= 1e-9,
          "50 pairs, " + std::to_string(violations) + " violations, min E[f(T_x u S)] - E[f(R_x u S)] = " +
              fmt(min_gap) + ", max |exact_F - enumeration| = " + fmt(worst_cross, 3)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{{"invariants", invariants},
                                        {"gradient-oracle", gradient_oracle},
                                        {"concentration", concentration},
                                        {"suboptimality-bound", suboptimality_bound},
                                        {"sequential-half", sequential_half},
                                        {"two-cluster", two_cluster},
                                        {"table2-trend", table2_trend},
                                        {"sequence-sensitivity", sequence_sensitivity},
                                        {"rounding-inequality", rounding_inequality}};
  std::vector<std::size_t> selected;
  for (int a = 1; a < argc; ++a) {
    const long v = std::strtol(argv[a], nullptr, 10);
    if (v < 1 || v > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu ...]\n", argv[0], criteria.size());
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(v));
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);
  }

  int failures = 0;
  for (std::size_t k : selected) {
    const auto& c = criteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu [%s] %s: %s (%.1f s)\n", k, out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
