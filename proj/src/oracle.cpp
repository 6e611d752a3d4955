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

#include "dcg/oracle.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dcg/errors.hpp"

namespace dcg {

void ValueOracle::gains(const PolicySet& r, std::span<const PolicyId> candidates,
                        std::span<double> out) const {
  if (out.size() != candidates.size()) throw std::invalid_argument("gains: size mismatch");
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const PolicyId p = candidates[k];
    out[k] = eval(r.with(p)) - eval(r.without(p));
  }
}

double marginal(const ValueOracle& f, PolicyId p, const PolicySet& s) {
  if (s.contains(p)) {
    if (p >= f.ground_size()) throw UnknownPolicy("policy " + std::to_string(p));
    return 0.0;
  }
  return f.eval(s.with(p)) - f.eval(s);
}

double FunctionOracle::eval(const PolicySet& s) const {
  if (!s.empty() && s.ids().back() >= n_) {
    throw UnknownPolicy("policy " + std::to_string(s.ids().back()) + " outside ground set");
  }
  return fn_(s);
}

FunctionOracle modular_oracle(std::vector<double> weights) {
  const std::size_t n = weights.size();
  return FunctionOracle(n, [w = std::move(weights)](const PolicySet& s) {
    double total = 0.0;
    for (PolicyId p : s) total += w[p];
    return total;
  });
}

// ---------------------------------------------------------------------------

CoverageOracle::CoverageOracle(std::span<const Point> interest_points,
                               std::span<const Point> placements,
                               std::span<const std::vector<std::size_t>> allowed,
                               std::span<const double> radii)
    : num_points_(interest_points.size()), words_((interest_points.size() + 63) / 64) {
  if (allowed.size() != radii.size()) {
    throw std::invalid_argument("coverage oracle: one radius per agent required");
  }
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    const double r2 = radii[i] * radii[i];
    for (std::size_t b : allowed[i]) {
      if (b >= placements.size()) {
        std::ostringstream msg;
        msg << "agent " << i << " allows unknown placement " << b;
        throw std::invalid_argument(msg.str());
      }
      std::vector<std::uint64_t> bits(words_, 0);
      for (std::size_t k = 0; k < interest_points.size(); ++k) {
        const double dx = interest_points[k].x - placements[b].x;
        const double dy = interest_points[k].y - placements[b].y;
        if (dx * dx + dy * dy <= r2) bits[k / 64] |= std::uint64_t{1} << (k % 64);
      }
      covers_.push_back(std::move(bits));
    }
  }
}

const std::vector<std::uint64_t>& CoverageOracle::cover(PolicyId p) const {
  if (p >= covers_.size()) {
    std::ostringstream msg;
    msg << "policy " << p << " outside ground set of size " << covers_.size();
    throw UnknownPolicy(msg.str());
  }
  return covers_[p];
}

std::size_t CoverageOracle::coverage_of(PolicyId p) const {
  std::size_t count = 0;
  for (auto w : cover(p)) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

double CoverageOracle::eval(const PolicySet& s) const {
  if (s.size() == 1) return static_cast<double>(coverage_of(*s.begin()));
  std::vector<std::uint64_t> acc(words_, 0);
  for (PolicyId p : s) {
    const auto& bits = cover(p);
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= bits[w];
  }
  std::size_t count = 0;
  for (auto w : acc) count += static_cast<std::size_t>(std::popcount(w));
  return static_cast<double>(count);
}

void CoverageOracle::gains(const PolicySet& r, std::span<const PolicyId> candidates,
                           std::span<double> out) const {
  if (out.size() != candidates.size()) throw std::invalid_argument("gains: size mismatch");
  std::vector<std::uint64_t> all(words_, 0);
  for (PolicyId q : r) {
    const auto& bits = cover(q);
    for (std::size_t w = 0; w < words_; ++w) all[w] |= bits[w];
  }
  std::size_t all_count = 0;
  for (auto w : all) all_count += static_cast<std::size_t>(std::popcount(w));

  std::vector<std::uint64_t> rest(words_, 0);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const PolicyId p = candidates[k];
    const auto& bits = cover(p);
    if (!r.contains(p)) {
      // f(r ∪ {p}) - f(r)
      std::size_t with = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        with += static_cast<std::size_t>(std::popcount(all[w] | bits[w]));
      }
      out[k] = static_cast<double>(with - all_count);
    } else {
      // f(r) - f(r \ {p})
      std::fill(rest.begin(), rest.end(), 0);
      for (PolicyId q : r) {
        if (q == p) continue;
        const auto& other = covers_[q];
        for (std::size_t w = 0; w < words_; ++w) rest[w] |= other[w];
      }
      std::size_t without = 0;
      for (auto w : rest) without += static_cast<std::size_t>(std::popcount(w));
      out[k] = static_cast<double>(all_count - without);
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string set_to_string(const PolicySet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (PolicyId p : s) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string PropertyReport::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::ok:
      return "monotone and submodular";
    case Kind::normalization:
      out << "not normalized: f({}) = " << lhs;
      break;
    case Kind::monotone:
      out << "monotonicity violated: f(" << set_to_string(s1) << ") = " << lhs << " > f("
          << set_to_string(s2) << ") = " << rhs;
      break;
    case Kind::submodular:
      out << "submodularity violated at S1=" << set_to_string(s1) << " S2=" << set_to_string(s2)
          << " p=" << *p << ": gain " << lhs << " < " << rhs;
      break;
  }
  return out.str();
}

PropertyReport check_monotone_submodular(const ValueOracle& f, double tolerance) {
  const std::size_t n = f.ground_size();
  if (n > kMaxCheckGroundSize) {
    throw GroundSetTooLarge("exhaustive property check supports n <= " +
                            std::to_string(kMaxCheckGroundSize) + ", got " + std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) table[mask] = f.eval(PolicySet::from_mask(mask));

  PropertyReport report;
  if (std::abs(table[0]) > tolerance) {
    report.kind = PropertyReport::Kind::normalization;
    report.lhs = table[0];
    return report;
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t p = 0; p < n; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      if (s & bit) continue;
      if (table[s] > table[s | bit] + tolerance) {
        report.kind = PropertyReport::Kind::monotone;
        report.s1 = PolicySet::from_mask(s);
        report.s2 = PolicySet::from_mask(s | bit);
        report.p = p;
        report.lhs = table[s];
        report.rhs = table[s | bit];
        return report;
      }
    }
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t qbit = std::uint64_t{1} << q;
      if (s & qbit) continue;
      for (std::size_t p = 0; p < n; ++p) {
        const std::uint64_t pbit = std::uint64_t{1} << p;
        if (p == q || (s & pbit)) continue;
        const double small = table[s | pbit] - table[s];
        const double large = table[s | qbit | pbit] - table[s | qbit];
        if (small + tolerance < large) {
          report.kind = PropertyReport::Kind::submodular;
          report.s1 = PolicySet::from_mask(s);
          report.s2 = PolicySet::from_mask(s | qbit);
          report.p = p;
          report.lhs = small;
          report.rhs = large;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace dcg
