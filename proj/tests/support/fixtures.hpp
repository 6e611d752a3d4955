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

// Shared scenarios for the unit and acceptance tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcg/ground.hpp"
#include "dcg/scenario.hpp"
#include "support/reference.hpp"

namespace fixtures {

/// Two clusters of points around placements A = (1, 1) and B = (5, 1).
/// Agent 0 ("orange", radius 1.0) sees 10 points at A and 5 at B; agent 1
/// ("blue", radius 0.5) sees 4 of those at A and 3 at B. Policies:
/// 0 = orange@A, 1 = orange@B, 2 = blue@A, 3 = blue@B.
dcg::Scenario two_cluster();
inline constexpr std::size_t kOrangeFirst[] = {0, 1};
inline constexpr std::size_t kBlueFirst[] = {1, 0};

/// Small random coverage scenario: `block_sizes[i]` distinct random
/// placements for agent i, random radii, `points` uniform points in a 4x4
/// field, ring/path edges chosen from the seed.
dcg::Scenario random_coverage(std::uint64_t seed, const std::vector<std::size_t>& block_sizes,
                              std::size_t points = 40);

/// 5 agents, 6x6 grid over a 6x6 field, 900 uniform points, radii
/// 0.5..1.5, ring graph.
dcg::Scenario paper_scale(std::uint64_t seed);

/// The six agent orders compared in the sequence-sensitivity study
/// (agents a..e are 0..4).
std::vector<std::vector<std::size_t>> sequence_cases();

/// Disks of a scenario's policies, for the reference coverage.
std::vector<ref::Disk> disks(const dcg::Scenario& s);

/// Path of the checked-in fixture directory.
std::string fixture_path(const std::string& name);

/// A reachable-looking belief: every block carries total mass `mass`
/// spread randomly over its policies.
dcg::InfoSet random_belief(const dcg::Partition& part, double mass, dcg::Rng& rng);

}  // namespace fixtures
