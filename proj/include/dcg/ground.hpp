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

// Ground set primitives: the agent-wise partition of the policy space,
// policy sets, membership probability vectors and information sets together
// with the mass-addition and max-merge operators used for message passing.
//
// Policies and agents are numbered from zero. Policies are sorted agent-wise:
// block 0 starts at policy 0 and the last block ends at policy n - 1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "dcg/rng.hpp"

namespace dcg {

using PolicyId = std::size_t;
using AgentId = std::size_t;

/// Tolerance for every "mass equals one" or "mass stays below one" check.
inline constexpr double kMassTolerance = 1e-9;

/// Half-open range of policy ids [first, last).
struct PolicyRange {
  PolicyId first = 0;
  PolicyId last = 0;

  std::size_t size() const { return last - first; }
  bool contains(PolicyId p) const { return p >= first && p < last; }
};

/// Partition of {0..n-1} into one contiguous, non-empty block per agent.
class Partition {
 public:
  /// Throws InvalidPartition if there are no blocks or a block is empty.
  explicit Partition(std::span<const std::size_t> block_sizes);
  Partition(std::initializer_list<std::size_t> block_sizes);

  std::size_t ground_size() const { return n_; }
  std::size_t num_agents() const { return blocks_.size(); }
  const PolicyRange& block(AgentId i) const;
  const std::vector<PolicyRange>& blocks() const { return blocks_; }
  std::vector<std::size_t> block_sizes() const;

  /// Agent owning policy p. Throws UnknownPolicy if p >= n.
  AgentId owner(PolicyId p) const;

 private:
  std::size_t n_ = 0;
  std::vector<PolicyRange> blocks_;
};

/// A finite set of policy ids, kept sorted and duplicate-free.
class PolicySet {
 public:
  PolicySet() = default;
  PolicySet(std::initializer_list<PolicyId> ids);
  explicit PolicySet(std::vector<PolicyId> ids);

  static PolicySet from_mask(std::uint64_t mask);

  bool contains(PolicyId p) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }

  void insert(PolicyId p);
  void erase(PolicyId p);
  PolicySet with(PolicyId p) const;
  PolicySet without(PolicyId p) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<PolicyId>& ids() const { return ids_; }

  friend bool operator==(const PolicySet&, const PolicySet&) = default;

 private:
  std::vector<PolicyId> ids_;
};

using MembershipVector = std::vector<double>;

/// An agent's belief: a map from policy id to accumulated membership
/// probability. Entries are kept sorted by policy id.
class InfoSet {
 public:
  using Entry = std::pair<PolicyId, double>;

  InfoSet() = default;
  InfoSet(std::initializer_list<Entry> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool contains(PolicyId p) const;
  /// Mass of p, or 0 if p is absent.
  double mass(PolicyId p) const;
  /// Total mass of the entries that fall in `range`.
  double mass(const PolicyRange& range) const;

  /// In-place mass addition. Throws MassOverflow when the result would
  /// exceed 1 by more than kMassTolerance; the set is left unchanged then.
  void add(PolicyId p, double alpha);

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const InfoSet&, const InfoSet&) = default;

 private:
  friend InfoSet max_merge(std::span<const InfoSet> sets);
  std::vector<Entry> entries_;
};

/// F ⊕ {(p, alpha)}: adds alpha to the mass of p, inserting p if absent.
InfoSet oplus(const InfoSet& f, PolicyId p, double alpha);

/// Per-key maximum over a non-empty collection of information sets.
InfoSet max_merge(std::span<const InfoSet> sets);
InfoSet max_merge(const InfoSet& a, const InfoSet& b);

/// x_p = alpha if (p, alpha) is in f, 0 otherwise.
MembershipVector to_membership_vector(const InfoSet& f, const Partition& part);

/// Random set with p included independently with probability x_p. One draw
/// per policy in ascending id order.
PolicySet sample_set(std::span<const double> x, Rng& rng);

/// Random set with q included independently with probability alpha for
/// every (q, alpha) in f. One draw per entry in ascending id order; policies
/// absent from f are never drawn.
PolicySet sample_set(const InfoSet& f, Rng& rng);

/// Picks exactly one policy of a block whose masses sum to one (within
/// kMassTolerance) by inverse CDF over ascending ids. Returns the offset
/// inside the block. Throws MassNotOne otherwise.
std::size_t sample_one_from_block(std::span<const double> block_mass, Rng& rng);

/// Offset of the largest entry; ties go to the lowest offset.
std::size_t argmax_lowest(std::span<const double> values);

}  // namespace dcg
