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

// Sensor-placement scenario files.
//
//   {
//     "field": [width, height],
//     "grid": [cols, rows],                 // placements at cell centres
//     "placements": [[x, y], ...],          // optional; replaces "grid"
//     "interest_points": [[x, y], ...]      // or {"count": 900, "seed": 7}
//     "agents": [{"allowed": [0, 3, ...] | "all", "radius": 0.5}, ...],
//     "graph": {"edges": [[0, 1], [1, 2], ...]}
//   }
//
// Agents, placements and graph vertices are numbered from zero. Generated
// interest points are uniform over the field.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcg/ground.hpp"
#include "dcg/oracle.hpp"
#include "json.hpp"

namespace dcg {

struct AgentSpec {
  std::vector<std::size_t> allowed;
  double radius = 0.0;
};

struct Scenario {
  double width = 0.0;
  double height = 0.0;
  std::vector<Point> placements;
  std::vector<Point> interest_points;
  std::vector<AgentSpec> agents;
  std::vector<std::pair<AgentId, AgentId>> edges;

  Partition partition() const;
  CoverageOracle oracle() const;
};

/// Placements at the centres of a cols x rows grid over the field.
std::vector<Point> grid_placements(double width, double height, std::size_t cols, std::size_t rows);

/// `count` points uniform over [0, width] x [0, height].
std::vector<Point> uniform_points(double width, double height, std::size_t count, std::uint64_t seed);

/// Throws ConfigError naming the offending key (and line, for text input).
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical form with explicit placements and interest points.
nlohmann::json scenario_to_json(const Scenario& s);

}  // namespace dcg
