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

// Multilinear extension F(x) = E[f(R_x)] of a set function: exact values and
// derivatives by enumeration of all 2^n vertices, Monte-Carlo estimates of
// F and of the gradient over one agent block, and Hoeffding sample sizing.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcg/ground.hpp"
#include "dcg/oracle.hpp"
#include "dcg/rng.hpp"

namespace dcg {

inline constexpr std::size_t kMaxExactGroundSize = 20;

/// Vertex table of a set function, f(S) for every S ⊆ {0..n-1}, indexed by
/// bitmask. Built once; every query is then an O(n 2^n) weighted sum.
class ExactExtension {
 public:
  /// Throws GroundSetTooLarge for n > kMaxExactGroundSize.
  explicit ExactExtension(const ValueOracle& f);

  std::size_t ground_size() const { return n_; }
  double vertex(std::uint64_t mask) const { return table_[mask]; }

  double value(std::span<const double> x) const;
  /// F(x | x_p = 1) - F(x | x_p = 0).
  double gradient(std::span<const double> x, PolicyId p) const;
  std::vector<double> gradient(std::span<const double> x) const;
  /// Second mixed difference in coordinates p != q.
  double hessian(std::span<const double> x, PolicyId p, PolicyId q) const;

 private:
  void check(std::span<const double> x) const;

  std::size_t n_;
  std::vector<double> table_;
};

double exact_F(const ValueOracle& f, std::span<const double> x);
double exact_grad(const ValueOracle& f, std::span<const double> x, PolicyId p);
double exact_hessian_entry(const ValueOracle& f, std::span<const double> x, PolicyId p, PolicyId q);

/// Monte-Carlo estimate of the gradient over one block of the partition.
struct GradientEstimate {
  PolicyRange block;
  std::vector<double> w;       ///< w[k] estimates dF/dx_{block.first + k}
  std::vector<double> stddev;  ///< sample standard deviation of each term
  std::size_t samples = 0;

  double at(PolicyId p) const { return w.at(p - block.first); }
  /// Policy with the largest estimate; ties go to the lowest id.
  PolicyId argmax() const { return block.first + argmax_lowest(w); }
};

/// Draws K sets R from `belief` (q ∈ R with probability alpha for (q, alpha)
/// in the belief), all before any evaluation, then averages
/// f(R ∪ {p}) - f(R \ {p}) over the same K sets for every p in `block`.
GradientEstimate estimate_grad_block(const ValueOracle& f, const InfoSet& belief,
                                     const PolicyRange& block, std::size_t samples, Rng& rng);

/// Exact block gradient at the belief's membership vector.
GradientEstimate exact_grad_block(const ExactExtension& ext, const InfoSet& belief,
                                  const PolicyRange& block);

/// (1/K) sum of f over K independent draws of R_x.
double estimate_F(const ValueOracle& f, std::span<const double> x, std::size_t samples, Rng& rng);

/// Smallest K with 2 exp(-K / (8 T^2)) <= delta, i.e. ceil(8 T^2 ln(2/delta)).
std::size_t required_samples(std::size_t steps, double delta);

}  // namespace dcg
