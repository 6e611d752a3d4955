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

#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "dcg/experiments.hpp"
#include "dcg/rng.hpp"

#ifndef DCG_FIXTURE_DIR
#define DCG_FIXTURE_DIR "fixtures"
#endif

namespace fixtures {

dcg::Scenario two_cluster() {
  dcg::Scenario s;
  s.width = 6.0;
  s.height = 2.0;
  s.placements = {{1.0, 1.0}, {5.0, 1.0}};
  s.interest_points = {
      // Cluster A: four points right at A, six on a ring of radius ~0.8.
      {1.0, 1.0}, {1.05, 1.0}, {1.0, 1.05}, {0.95, 1.0},
      {1.8, 1.0}, {0.2, 1.0}, {1.0, 1.8}, {1.0, 0.2}, {1.56, 1.56}, {0.44, 0.44},
      // Cluster B: three points at B, two on the ring.
      {5.0, 1.0}, {5.05, 1.0}, {5.0, 1.05},
      {5.8, 1.0}, {4.2, 1.0}};
  s.agents = {{{0, 1}, 1.0}, {{0, 1}, 0.5}};
  s.edges = {{0, 1}};
  return s;
}

dcg::Scenario random_coverage(std::uint64_t seed, const std::vector<std::size_t>& block_sizes,
                              std::size_t points) {
  dcg::Rng rng(seed);
  dcg::Scenario s;
  s.width = 4.0;
  s.height = 4.0;
  s.interest_points = dcg::uniform_points(s.width, s.height, points, seed);
  const std::size_t max_block = *std::max_element(block_sizes.begin(), block_sizes.end());
  const std::size_t num_placements = max_block + 2;
  for (std::size_t b = 0; b < num_placements; ++b) {
    s.placements.push_back({0.5 + 3.0 * rng.uniform(), 0.5 + 3.0 * rng.uniform()});
  }
  for (std::size_t size : block_sizes) {
    std::vector<std::size_t> all(num_placements);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t k = 0; k + 1 < all.size(); ++k) {
      const std::size_t j = k + static_cast<std::size_t>(rng.uniform() * static_cast<double>(all.size() - k));
      std::swap(all[k], all[j]);
    }
    all.resize(size);
    std::sort(all.begin(), all.end());
    s.agents.push_back({all, 0.4 + 1.1 * rng.uniform()});
  }
  const std::size_t n = block_sizes.size();
  for (std::size_t i = 0; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1);
  if (n > 2 && (seed & 1U)) s.edges.emplace_back(n - 1, 0);
  return s;
}

dcg::Scenario paper_scale(std::uint64_t seed) {
  return dcg::scenario_from_json(dcg::generate_scenario(dcg::ScenarioParams{}, seed));
}

std::vector<std::vector<std::size_t>> sequence_cases() {
  return {{0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1},
          {3, 2, 1, 0, 4}, {4, 0, 1, 2, 3}, {4, 3, 2, 1, 0}};
}

std::vector<ref::Disk> disks(const dcg::Scenario& s) {
  std::vector<ref::Disk> out;
  for (const auto& a : s.agents) {
    for (std::size_t b : a.allowed) out.push_back({s.placements[b], a.radius});
  }
  return out;
}

std::string fixture_path(const std::string& name) { return std::string(DCG_FIXTURE_DIR) + "/" + name; }

dcg::InfoSet random_belief(const dcg::Partition& part, double mass, dcg::Rng& rng) {
  dcg::InfoSet belief;
  for (const auto& block : part.blocks()) {
    std::vector<double> w(block.size());
    double total = 0.0;
    for (double& v : w) {
      v = rng.uniform();
      total += v;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double alpha = mass * w[k] / total;
      if (alpha > 0.0) belief.add(block.first + k, std::min(alpha, 1.0));
    }
  }
  return belief;
}

}  // namespace fixtures
