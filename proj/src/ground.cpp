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

#include "dcg/ground.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dcg/errors.hpp"

namespace dcg {

Partition::Partition(std::span<const std::size_t> block_sizes) {
  if (block_sizes.empty()) throw InvalidPartition("partition needs at least one block");
  blocks_.reserve(block_sizes.size());
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    if (block_sizes[i] == 0) {
      std::ostringstream msg;
      msg << "block of agent " << i << " is empty";
      throw InvalidPartition(msg.str());
    }
    blocks_.push_back({n_, n_ + block_sizes[i]});
    n_ += block_sizes[i];
  }
}

Partition::Partition(std::initializer_list<std::size_t> block_sizes)
    : Partition(std::span<const std::size_t>(block_sizes.begin(), block_sizes.size())) {}

const PolicyRange& Partition::block(AgentId i) const {
  if (i >= blocks_.size()) throw std::out_of_range("agent index out of range");
  return blocks_[i];
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(b.size());
  return sizes;
}

AgentId Partition::owner(PolicyId p) const {
  if (p >= n_) {
    std::ostringstream msg;
    msg << "policy " << p << " outside ground set of size " << n_;
    throw UnknownPolicy(msg.str());
  }
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), p,
                             [](PolicyId v, const PolicyRange& b) { return v < b.first; });
  return static_cast<AgentId>(std::distance(blocks_.begin(), it) - 1);
}

// ---------------------------------------------------------------------------

PolicySet::PolicySet(std::initializer_list<PolicyId> ids) : PolicySet(std::vector<PolicyId>(ids)) {}

PolicySet::PolicySet(std::vector<PolicyId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

PolicySet PolicySet::from_mask(std::uint64_t mask) {
  PolicySet s;
  s.ids_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.ids_.push_back(static_cast<PolicyId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool PolicySet::contains(PolicyId p) const { return std::binary_search(ids_.begin(), ids_.end(), p); }

void PolicySet::insert(PolicyId p) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), p);
  if (it == ids_.end() || *it != p) ids_.insert(it, p);
}

void PolicySet::erase(PolicyId p) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), p);
  if (it != ids_.end() && *it == p) ids_.erase(it);
}

PolicySet PolicySet::with(PolicyId p) const {
  PolicySet s = *this;
  s.insert(p);
  return s;
}

PolicySet PolicySet::without(PolicyId p) const {
  PolicySet s = *this;
  s.erase(p);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void check_alpha(PolicyId p, double alpha) {
  if (!(alpha >= -kMassTolerance) || alpha > 1.0 + kMassTolerance) {
    std::ostringstream msg;
    msg << "mass " << alpha << " of policy " << p << " outside [0, 1]";
    throw MassOverflow(msg.str());
  }
}

}  // namespace

InfoSet::InfoSet(std::initializer_list<Entry> entries) : entries_(entries) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    check_alpha(entries_[k].first, entries_[k].second);
    if (k > 0 && entries_[k - 1].first == entries_[k].first) {
      throw std::invalid_argument("information set holds policy " +
                                  std::to_string(entries_[k].first) + " twice");
    }
  }
}

bool InfoSet::contains(PolicyId p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, PolicyId v) { return e.first < v; });
  return it != entries_.end() && it->first == p;
}

double InfoSet::mass(PolicyId p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, PolicyId v) { return e.first < v; });
  return (it != entries_.end() && it->first == p) ? it->second : 0.0;
}

double InfoSet::mass(const PolicyRange& range) const {
  double total = 0.0;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), range.first,
                             [](const Entry& e, PolicyId v) { return e.first < v; });
  for (; it != entries_.end() && it->first < range.last; ++it) total += it->second;
  return total;
}

void InfoSet::add(PolicyId p, double alpha) {
  check_alpha(p, alpha);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, PolicyId v) { return e.first < v; });
  if (it != entries_.end() && it->first == p) {
    const double sum = it->second + alpha;
    if (sum > 1.0 + kMassTolerance) {
      std::ostringstream msg;
      msg << "adding " << alpha << " to policy " << p << " gives mass " << sum;
      throw MassOverflow(msg.str());
    }
    it->second = sum;
  } else {
    entries_.insert(it, {p, alpha});
  }
}

InfoSet oplus(const InfoSet& f, PolicyId p, double alpha) {
  InfoSet out = f;
  out.add(p, alpha);
  return out;
}

InfoSet max_merge(std::span<const InfoSet> sets) {
  if (sets.empty()) throw std::invalid_argument("max_merge of an empty collection");
  if (sets.size() == 1) return sets.front();

  // k-way merge of sorted entry lists.
  std::vector<std::size_t> cursor(sets.size(), 0);
  InfoSet out;
  std::size_t total = 0;
  for (const auto& s : sets) total = std::max(total, s.size());
  out.entries_.reserve(total);
  for (;;) {
    PolicyId next = 0;
    bool any = false;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (cursor[j] < sets[j].entries_.size()) {
        const PolicyId p = sets[j].entries_[cursor[j]].first;
        if (!any || p < next) next = p;
        any = true;
      }
    }
    if (!any) break;
    double best = 0.0;
    bool first = true;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (cursor[j] < sets[j].entries_.size() && sets[j].entries_[cursor[j]].first == next) {
        const double a = sets[j].entries_[cursor[j]].second;
        if (first || a > best) best = a;
        first = false;
        ++cursor[j];
      }
    }
    out.entries_.emplace_back(next, best);
  }
  return out;
}

InfoSet max_merge(const InfoSet& a, const InfoSet& b) {
  const InfoSet pair[] = {a, b};
  return max_merge(std::span<const InfoSet>(pair));
}

MembershipVector to_membership_vector(const InfoSet& f, const Partition& part) {
  MembershipVector x(part.ground_size(), 0.0);
  for (const auto& [p, alpha] : f) {
    if (p >= x.size()) {
      throw UnknownPolicy("policy " + std::to_string(p) + " outside the partition");
    }
    x[p] = alpha;
  }
  return x;
}

PolicySet sample_set(std::span<const double> x, Rng& rng) {
  std::vector<PolicyId> ids;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (rng.uniform() < x[p]) ids.push_back(p);
  }
  return PolicySet(std::move(ids));
}

PolicySet sample_set(const InfoSet& f, Rng& rng) {
  std::vector<PolicyId> ids;
  ids.reserve(f.size());
  for (const auto& [p, alpha] : f) {
    if (rng.uniform() < alpha) ids.push_back(p);
  }
  return PolicySet(std::move(ids));
}

std::size_t sample_one_from_block(std::span<const double> block_mass, Rng& rng) {
  double total = 0.0;
  for (double m : block_mass) total += m;
  if (block_mass.empty() || std::abs(total - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg << "block mass " << total << " is not one";
    throw MassNotOne(msg.str());
  }
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < block_mass.size(); ++k) {
    if (block_mass[k] <= 0.0) continue;
    last_positive = k;
    cumulative += block_mass[k];
    if (u < cumulative) return k;
  }
  return last_positive;
}

std::size_t argmax_lowest(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("argmax of an empty range");
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
  }
  return best;
}

}  // namespace dcg
