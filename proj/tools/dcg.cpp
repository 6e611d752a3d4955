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

// Command line front end.
//
//   dcg generate    --out scenario.json [--radii 0.5,0.6,0.7,0.8,1.5] [--points 900]
//                   [--field 6,6] [--grid 6,6] [--graph ring] [--seed 1]
//   dcg run         --scenario s.json --algo distributed --T 1,5,10,20 --K 500
//                   [--hops 1,d] [--seeds 1-20] [--orders "0,1,2;2,1,0"]
//                   [--rounding sample|argmax] [--threads N] [--no-timing] [--out r.csv]
//   dcg audit       --scenario s.json --T 20 --K 500 [--hops 1,d] [--seeds 1-20]
//   dcg sensitivity --scenario s.json --orders "..." --T 20 --K 500 [--hops 1]
//                   [--seeds 1-20] [--out sens.csv]
//
// Exit codes: 0 success, 1 configuration error, 2 invariant audit failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcg/audit.hpp"
#include "dcg/errors.hpp"
#include "dcg/experiments.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitAudit = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw dcg::ConfigError("invalid " + what + " value \"" + text + "\"");
  }
  return v;
}

// "1,2,5-8" -> 1 2 5 6 7 8
std::vector<std::uint64_t> parse_uint_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_uint(part, what));
      continue;
    }
    const auto lo = parse_uint(part.substr(0, dash), what);
    const auto hi = parse_uint(part.substr(dash + 1), what);
    if (hi < lo) throw dcg::ConfigError("empty range \"" + part + "\" in " + what);
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw dcg::ConfigError(what + " list is empty");
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  for (auto v : parse_uint_list(text, what)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

// "d" stands for the graph diameter.
std::vector<std::size_t> parse_hops(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) {
    if (part == "d") {
      out.push_back(dcg::kHopsDiameter);
    } else {
      const auto v = parse_uint(part, "hops");
      if (v == 0) throw dcg::ConfigError("hops must be at least 1 (or \"d\")");
      out.push_back(static_cast<std::size_t>(v));
    }
  }
  if (out.empty()) throw dcg::ConfigError("hops list is empty");
  return out;
}

std::vector<std::vector<dcg::AgentId>> parse_orders(const std::string& text) {
  std::vector<std::vector<dcg::AgentId>> out;
  for (const auto& part : split(text, ';')) {
    std::vector<dcg::AgentId> order;
    for (const auto& a : split(part, ',')) order.push_back(static_cast<dcg::AgentId>(parse_uint(a, "order")));
    out.push_back(std::move(order));
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw dcg::ConfigError("invalid " + what + " value \"" + part + "\"");
    out.push_back(v);
  }
  return out;
}

dcg::Rounding parse_rounding(const std::string& name) {
  if (name == "sample") return dcg::Rounding::sample;
  if (name == "argmax") return dcg::Rounding::argmax;
  throw dcg::ConfigError("unknown rounding \"" + name + "\" (sample, argmax)");
}

std::size_t resolve_hops(std::size_t hops, const dcg::CommGraph& graph) {
  return hops == dcg::kHopsDiameter ? std::max<std::size_t>(1, graph.diameter()) : hops;
}

// Writes to `path`, or stdout when empty.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw dcg::ConfigError("cannot write " + path);
  fn(out);
}

struct SweepOptions {
  std::string scenario;
  std::string steps = "20";
  std::string samples = "500";
  std::string hops = "1";
  std::string seeds = "1";
  std::string rounding = "sample";
  std::string out;
  std::size_t threads = 1;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--scenario", o.scenario, "Scenario JSON file")->required();
  cmd->add_option("--T", o.steps, "Iteration counts, e.g. 1,5,10,20");
  cmd->add_option("--K", o.samples, "Sample counts, e.g. 10,100,500");
  cmd->add_option("--hops", o.hops, "Exchange rounds per step; \"d\" = graph diameter");
  cmd->add_option("--seeds", o.seeds, "Seeds, e.g. 1-20 or 3,5,8");
  cmd->add_option("--rounding", o.rounding, "Final rounding: sample or argmax");
  cmd->add_option("--threads", o.threads, "Worker threads");
}

int run_generate(const dcg::ScenarioParams& params, std::uint64_t seed, const std::string& out) {
  const auto doc = dcg::generate_scenario(params, seed);
  with_output(out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return 0;
}

int run_audit(const SweepOptions& o) {
  const auto scenario = dcg::load_scenario(o.scenario);
  const auto part = scenario.partition();
  const auto oracle = scenario.oracle();
  const dcg::CommGraph graph(part.num_agents(), scenario.edges);
  const auto rounding = parse_rounding(o.rounding);
  bool all_ok = true;
  for (auto t : parse_sizes(o.steps, "T")) {
    for (auto k : parse_sizes(o.samples, "K")) {
      for (auto h : parse_hops(o.hops)) {
        for (auto seed : parse_uint_list(o.seeds, "seeds")) {
          dcg::RunConfig cfg;
          cfg.steps = t;
          cfg.samples = {k};
          cfg.hops = resolve_hops(h, graph);
          cfg.seed = seed;
          cfg.rounding = rounding;
          const auto run = dcg::distributed_cg(oracle, part, graph, cfg);
          const auto report = dcg::audit_distributed(run.trace, part, graph);
          std::cout << "T=" << t << " K=" << k << " hops=" << cfg.hops << " seed=" << seed << ": "
                    << (report.ok() ? "pass" : "FAIL") << " (" << report.checks << " checks, "
                    << report.violation_count << " violations)\n";
          for (const auto& v : report.violations) std::cout << "  " << v << '\n';
          all_ok = all_ok && report.ok();
        }
      }
    }
  }
  return all_ok ? 0 : kExitAudit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed continuous greedy for multi-agent sensor placement"};
  app.require_subcommand(1);

  dcg::ScenarioParams gen;
  std::string gen_radii = "0.5,0.6,0.7,0.8,1.5";
  std::string gen_field = "6,6";
  std::string gen_grid = "6,6";
  std::string gen_graph = "ring";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random sensor-placement scenario");
  generate->add_option("--radii", gen_radii, "Sensing radius per agent");
  generate->add_option("--points", gen.points, "Number of interest points");
  generate->add_option("--field", gen_field, "Field width,height");
  generate->add_option("--grid", gen_grid, "Placement grid cols,rows");
  generate->add_option("--graph", gen_graph, "ring, path, complete or star");
  generate->add_option("--seed", gen_seed, "Seed for the interest points");
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  SweepOptions run_opts;
  std::string algo = "distributed";
  std::string run_orders;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run an algorithm sweep and write the results CSV");
  add_sweep_options(run, run_opts);
  run->add_option("--algo", algo, "distributed, central, sequential or brute");
  run->add_option("--orders", run_orders, "Agent orders for sequential, e.g. \"0,1,2;2,1,0\"");
  run->add_flag("--no-timing", no_timing, "Write 0 in the ms column (byte-reproducible output)");
  run->add_option("--out", run_opts.out, "Output CSV (default stdout)");

  SweepOptions audit_opts;
  auto* audit = app.add_subcommand("audit", "Run distributed sweeps and check every trace invariant");
  add_sweep_options(audit, audit_opts);

  SweepOptions sens_opts;
  std::string sens_orders;
  auto* sensitivity = app.add_subcommand("sensitivity", "Compare agent-order spread with seed spread");
  add_sweep_options(sensitivity, sens_opts);
  sensitivity->add_option("--orders", sens_orders, "Agent orders, e.g. \"0,1,2;2,1,0\"")->required();
  sensitivity->add_option("--out", sens_opts.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*generate) {
      gen.radii = parse_doubles(gen_radii, "radii");
      const auto field = parse_doubles(gen_field, "field");
      const auto grid = parse_sizes(gen_grid, "grid");
      if (field.size() != 2 || grid.size() != 2) throw dcg::ConfigError("--field and --grid take two values");
      gen.width = field[0];
      gen.height = field[1];
      gen.grid_cols = grid[0];
      gen.grid_rows = grid[1];
      gen.graph = dcg::parse_graph_kind(gen_graph);
      return run_generate(gen, gen_seed, gen_out);
    }
    if (*run) {
      dcg::ExperimentSpec spec;
      spec.algorithm = dcg::parse_algorithm(algo);
      spec.steps = parse_sizes(run_opts.steps, "T");
      spec.samples = parse_sizes(run_opts.samples, "K");
      spec.hops = parse_hops(run_opts.hops);
      spec.seeds = parse_uint_list(run_opts.seeds, "seeds");
      if (!run_orders.empty()) spec.orders = parse_orders(run_orders);
      spec.rounding = parse_rounding(run_opts.rounding);
      spec.timing = !no_timing;
      spec.threads = run_opts.threads;
      const auto scenario = dcg::load_scenario(run_opts.scenario);
      const auto rows = dcg::run_experiment(spec, scenario);
      with_output(run_opts.out, [&](std::ostream& os) { dcg::write_csv(os, rows); });
      for (const auto& r : rows) {
        if (r.audit == "fail") {
          std::cerr << "invariant audit failed for seed " << r.seed.value_or(0) << '\n';
          return kExitAudit;
        }
      }
      return 0;
    }
    if (*audit) return run_audit(audit_opts);
    if (*sensitivity) {
      const auto scenario = dcg::load_scenario(sens_opts.scenario);
      const dcg::CommGraph graph(scenario.agents.size(), scenario.edges);
      dcg::RunConfig cfg;
      const auto steps = parse_sizes(sens_opts.steps, "T");
      const auto samples = parse_sizes(sens_opts.samples, "K");
      const auto hops = parse_hops(sens_opts.hops);
      if (steps.size() != 1 || samples.size() != 1 || hops.size() != 1) {
        throw dcg::ConfigError("sensitivity takes a single T, K and hops value");
      }
      cfg.steps = steps[0];
      cfg.samples = {samples[0]};
      cfg.hops = resolve_hops(hops[0], graph);
      cfg.rounding = parse_rounding(sens_opts.rounding);
      const auto report = dcg::sequence_sensitivity_report(
          scenario, parse_orders(sens_orders), cfg, parse_uint_list(sens_opts.seeds, "seeds"), sens_opts.threads);
      with_output(sens_opts.out, [&](std::ostream& os) { dcg::write_sensitivity_csv(os, report); });
      std::cerr << "sequential spread " << report.sequential_spread << ", distributed spread "
                << report.distributed_spread << ", distributed IQR " << report.distributed_iqr << '\n';
      return 0;
    }
  } catch (const dcg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
