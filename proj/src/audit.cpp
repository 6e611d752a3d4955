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

#include "dcg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dcg {

namespace {

constexpr std::size_t kKeptMessages = 20;

using Vectors = std::vector<MembershipVector>;

Vectors to_vectors(const std::vector<InfoSet>& states, const Partition& part) {
  Vectors out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(to_membership_vector(s, part));
  return out;
}

MembershipVector pointwise_max(const Vectors& xs) {
  MembershipVector m(xs.front().size(), 0.0);
  for (const auto& x : xs) {
    for (std::size_t p = 0; p < m.size(); ++p) m[p] = std::max(m[p], x[p]);
  }
  return m;
}

double sum(const MembershipVector& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Checks the invariants that only depend on the states at one time t.
void audit_states(AuditReport& report, const std::vector<InfoSet>& states, std::size_t t,
                  const Partition& part, const CommGraph& graph, std::size_t steps, std::size_t hops) {
  const std::size_t n_agents = part.num_agents();
  const double inv_t = 1.0 / static_cast<double>(steps);
  if (states.size() != n_agents) {
    report.fail("t=" + std::to_string(t) + ": expected one state per agent");
    return;
  }
  const Vectors xs = to_vectors(states, part);
  const MembershipVector xbar = pointwise_max(xs);
  const double expected_mass = static_cast<double>(t) * inv_t;

  for (AgentId i = 0; i < n_agents; ++i) {
    const PolicyRange& block = part.block(i);
    // Own-block mass.
    ++report.checks;
    const double own = states[i].mass(block);
    if (std::abs(own - expected_mass) > kMassTolerance) {
      std::ostringstream msg;
      msg << "t=" << t << " agent " << i << ": own-block mass " << own << " != t/T = " << expected_mass;
      report.fail(msg.str());
    }
    // Dominance of the owner's view of its block.
    for (AgentId j = 0; j < n_agents; ++j) {
      if (j == i) continue;
      ++report.checks;
      for (PolicyId p = block.first; p < block.last; ++p) {
        if (xs[j][p] > xs[i][p]) {
          std::ostringstream msg;
          msg << "t=" << t << ": agent " << j << " believes x_" << p << " = " << xs[j][p]
              << " above owner " << i << "'s " << xs[i][p];
          report.fail(msg.str());
          break;
        }
      }
    }
    // Staleness.
    ++report.checks;
    MembershipVector diff(xbar.size());
    for (std::size_t p = 0; p < xbar.size(); ++p) diff[p] = xbar[p] - xs[i][p];
    const double gap = sum(diff) / static_cast<double>(n_agents);
    const double limit = static_cast<double>(graph.diameter()) * inv_t;
    if (gap < -kMassTolerance || gap > limit + kMassTolerance) {
      std::ostringstream msg;
      msg << "t=" << t << " agent " << i << ": (1/N)1.(xbar - x_i) = " << gap << " outside [0, "
          << limit << "]";
      report.fail(msg.str());
    }
    // Exact consensus with enough hops.
    if (hops >= graph.diameter()) {
      ++report.checks;
      for (std::size_t p = 0; p < xbar.size(); ++p) {
        if (std::abs(xbar[p] - xs[i][p]) > kMassTolerance) {
          std::ostringstream msg;
          msg << "t=" << t << " agent " << i << ": x_" << p << " = " << xs[i][p]
              << " differs from consensus " << xbar[p] << " with hops >= d(G)";
          report.fail(msg.str());
          break;
        }
      }
    }
  }
}

}  // namespace

void AuditReport::fail(std::string message) {
  ++violation_count;
  if (violations.size() < kKeptMessages) violations.push_back(std::move(message));
}

AuditReport audit_distributed(const RunTrace& trace, const Partition& part, const CommGraph& graph) {
  AuditReport report;
  const std::size_t n_agents = part.num_agents();
  const double inv_t = 1.0 / static_cast<double>(trace.steps);

  ++report.checks;
  if (trace.records.size() != trace.steps) {
    report.fail("trace holds " + std::to_string(trace.records.size()) + " steps, expected " +
                std::to_string(trace.steps));
    return report;
  }

  for (std::size_t t = 0; t < trace.steps; ++t) {
    const StepRecord& rec = trace.records[t];
    audit_states(report, rec.before, t, part, graph, trace.steps, trace.hops);

    ++report.checks;
    if (rec.chosen.size() != n_agents || rec.after.size() != n_agents) {
      report.fail("t=" + std::to_string(t) + ": expected one choice and state per agent");
      continue;
    }
    for (AgentId i = 0; i < n_agents; ++i) {
      ++report.checks;
      if (!part.block(i).contains(rec.chosen[i])) {
        report.fail("t=" + std::to_string(t) + " agent " + std::to_string(i) + " chose policy " +
                    std::to_string(rec.chosen[i]) + " outside its block");
      }
    }

    // The step itself: xbar(t+1) - xbar(t) = (1/T) sum_i 1_{p*_i}.
    const MembershipVector before = pointwise_max(to_vectors(rec.before, part));
    const MembershipVector after = pointwise_max(to_vectors(rec.after, part));
    MembershipVector expected(before.size(), 0.0);
    for (PolicyId p : rec.chosen) expected[p] += inv_t;
    ++report.checks;
    for (std::size_t p = 0; p < before.size(); ++p) {
      if (std::abs((after[p] - before[p]) - expected[p]) > kMassTolerance) {
        std::ostringstream msg;
        msg << "t=" << t << ": xbar_" << p << " moved by " << after[p] - before[p] << ", expected "
            << expected[p];
        report.fail(msg.str());
        break;
      }
    }
    ++report.checks;
    const double growth = (sum(after) - sum(before)) / static_cast<double>(n_agents);
    if (std::abs(growth - inv_t) > kMassTolerance) {
      std::ostringstream msg;
      msg << "t=" << t << ": (1/N)1.(xbar(t+1) - xbar(t)) = " << growth << " != 1/T";
      report.fail(msg.str());
    }
  }
  audit_states(report, trace.final_states, trace.steps, part, graph, trace.steps, trace.hops);

  ++report.checks;
  if (trace.final_choice.size() != n_agents) {
    report.fail("output does not hold one policy per agent");
  } else {
    for (AgentId i = 0; i < n_agents; ++i) {
      if (!part.block(i).contains(trace.final_choice[i])) {
        report.fail("agent " + std::to_string(i) + " output policy " + std::to_string(trace.final_choice[i]) +
                    " outside its block");
      }
    }
  }
  return report;
}

}  // namespace dcg
