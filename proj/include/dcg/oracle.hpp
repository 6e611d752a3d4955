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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcg/ground.hpp"

namespace dcg {

/// Black-box set function f : 2^P -> R>=0 over the ground set {0..n-1}.
/// Implementations must be safe to evaluate concurrently.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::size_t ground_size() const = 0;

  /// f(s). Throws UnknownPolicy for ids >= ground_size().
  virtual double eval(const PolicySet& s) const = 0;

  /// out[k] = f(r ∪ {c_k}) - f(r \ {c_k}) for every candidate c_k.
  /// The default makes two eval() calls per candidate; oracles with cheap
  /// incremental structure override it.
  virtual void gains(const PolicySet& r, std::span<const PolicyId> candidates,
                     std::span<double> out) const;
};

/// f(s ∪ {p}) - f(s).
double marginal(const ValueOracle& f, PolicyId p, const PolicySet& s);

/// Adapts a callable to the oracle interface.
class FunctionOracle final : public ValueOracle {
 public:
  using Fn = std::function<double(const PolicySet&)>;

  FunctionOracle(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}

  std::size_t ground_size() const override { return n_; }
  double eval(const PolicySet& s) const override;

 private:
  std::size_t n_;
  Fn fn_;
};

/// f(S) = sum of c_p over p in S.
FunctionOracle modular_oracle(std::vector<double> weights);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Union-of-disks coverage: f(S) is the number of interest points within
/// distance r_i (inclusive) of at least one placement chosen in S. Covered
/// sets are precomputed as bitsets, so eval is an OR-popcount.
class CoverageOracle final : public ValueOracle {
 public:
  /// One policy per (agent, allowed placement), numbered agent-wise in the
  /// order of `allowed`.
  CoverageOracle(std::span<const Point> interest_points, std::span<const Point> placements,
                 std::span<const std::vector<std::size_t>> allowed, std::span<const double> radii);

  std::size_t ground_size() const override { return covers_.size(); }
  std::size_t num_points() const { return num_points_; }
  double eval(const PolicySet& s) const override;
  void gains(const PolicySet& r, std::span<const PolicyId> candidates,
             std::span<double> out) const override;

  /// Interest points covered by policy p alone.
  std::size_t coverage_of(PolicyId p) const;

 private:
  const std::vector<std::uint64_t>& cover(PolicyId p) const;

  std::size_t num_points_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> covers_;
};

/// Outcome of an exhaustive monotonicity/submodularity check. On failure
/// `s1`, `s2` and `p` describe the first violated inequality:
///   normalization: f(∅) != 0
///   monotone:      f(s1) > f(s2) with s2 = s1 ∪ {p}
///   submodular:    Δ(p|s1) < Δ(p|s2) with s1 ⊂ s2, p ∉ s2
struct PropertyReport {
  enum class Kind { ok, normalization, monotone, submodular };

  Kind kind = Kind::ok;
  PolicySet s1;
  PolicySet s2;
  std::optional<PolicyId> p;
  double lhs = 0.0;
  double rhs = 0.0;

  bool ok() const { return kind == Kind::ok; }
  std::string describe() const;
};

inline constexpr std::size_t kMaxCheckGroundSize = 15;

/// Enumerates all 2^n subsets. Throws GroundSetTooLarge above
/// kMaxCheckGroundSize. Submodularity is checked through the equivalent
/// local form Δ(p|S) >= Δ(p|S ∪ {q}) for all S and distinct p, q ∉ S.
PropertyReport check_monotone_submodular(const ValueOracle& f, double tolerance = 1e-9);

}  // namespace dcg
