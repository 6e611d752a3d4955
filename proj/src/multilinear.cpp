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

#include "dcg/multilinear.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dcg/errors.hpp"

namespace dcg {

ExactExtension::ExactExtension(const ValueOracle& f) : n_(f.ground_size()) {
  if (n_ > kMaxExactGroundSize) {
    std::ostringstream msg;
    msg << "exact multilinear extension supports n <= " << kMaxExactGroundSize << ", got " << n_;
    throw GroundSetTooLarge(msg.str());
  }
  const std::uint64_t count = std::uint64_t{1} << n_;
  table_.resize(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) table_[mask] = f.eval(PolicySet::from_mask(mask));
}

void ExactExtension::check(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("membership vector has the wrong length");
}

double ExactExtension::value(std::span<const double> x) const {
  check(x);
  // weight[mask] = prod_{p in mask} x_p prod_{p not in mask} (1 - x_p), built
  // one coordinate at a time so no division by (1 - x_p) is needed.
  std::vector<double> weight(table_.size());
  weight[0] = 1.0;
  for (std::size_t b = 0; b < n_; ++b) {
    const std::uint64_t half = std::uint64_t{1} << b;
    for (std::uint64_t mask = 0; mask < half; ++mask) {
      weight[mask | half] = weight[mask] * x[b];
      weight[mask] *= 1.0 - x[b];
    }
  }
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < table_.size(); ++mask) total += weight[mask] * table_[mask];
  return total;
}

double ExactExtension::gradient(std::span<const double> x, PolicyId p) const {
  check(x);
  if (p >= n_) throw UnknownPolicy("policy " + std::to_string(p));
  std::vector<double> y(x.begin(), x.end());
  y[p] = 1.0;
  const double hi = value(y);
  y[p] = 0.0;
  return hi - value(y);
}

std::vector<double> ExactExtension::gradient(std::span<const double> x) const {
  std::vector<double> g(n_);
  for (std::size_t p = 0; p < n_; ++p) g[p] = gradient(x, p);
  return g;
}

double ExactExtension::hessian(std::span<const double> x, PolicyId p, PolicyId q) const {
  check(x);
  if (p >= n_ || q >= n_) throw UnknownPolicy("policy out of range");
  if (p == q) throw std::invalid_argument("hessian entry needs p != q");
  std::vector<double> y(x.begin(), x.end());
  auto at = [&](double vp, double vq) {
    y[p] = vp;
    y[q] = vq;
    return value(y);
  };
  return at(1, 1) - at(0, 1) - at(1, 0) + at(0, 0);
}

double exact_F(const ValueOracle& f, std::span<const double> x) { return ExactExtension(f).value(x); }

double exact_grad(const ValueOracle& f, std::span<const double> x, PolicyId p) {
  return ExactExtension(f).gradient(x, p);
}

double exact_hessian_entry(const ValueOracle& f, std::span<const double> x, PolicyId p, PolicyId q) {
  return ExactExtension(f).hessian(x, p, q);
}

// ---------------------------------------------------------------------------

GradientEstimate estimate_grad_block(const ValueOracle& f, const InfoSet& belief,
                                     const PolicyRange& block, std::size_t samples, Rng& rng) {
  if (samples == 0) throw std::invalid_argument("gradient estimate needs at least one sample");
  if (block.size() == 0) throw std::invalid_argument("gradient estimate over an empty block");

  // All sample sets come from the one stream before anything is evaluated.
  std::vector<PolicySet> draws;
  draws.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) draws.push_back(sample_set(belief, rng));

  std::vector<PolicyId> candidates(block.size());
  for (std::size_t k = 0; k < block.size(); ++k) candidates[k] = block.first + k;

  std::vector<double> sum(block.size(), 0.0);
  std::vector<double> sum_sq(block.size(), 0.0);
  std::vector<double> g(block.size());
  for (const auto& r : draws) {
    f.gains(r, candidates, g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      sum[k] += g[k];
      sum_sq[k] += g[k] * g[k];
    }
  }

  GradientEstimate est;
  est.block = block;
  est.samples = samples;
  est.w.resize(block.size());
  est.stddev.resize(block.size());
  const double k_samples = static_cast<double>(samples);
  for (std::size_t k = 0; k < block.size(); ++k) {
    est.w[k] = sum[k] / k_samples;
    if (samples > 1) {
      const double var = (sum_sq[k] - sum[k] * sum[k] / k_samples) / (k_samples - 1.0);
      est.stddev[k] = std::sqrt(std::max(0.0, var));
    }
  }
  return est;
}

GradientEstimate exact_grad_block(const ExactExtension& ext, const InfoSet& belief,
                                  const PolicyRange& block) {
  std::vector<double> x(ext.ground_size(), 0.0);
  for (const auto& [p, alpha] : belief) x.at(p) = alpha;
  GradientEstimate est;
  est.block = block;
  est.w.resize(block.size());
  est.stddev.assign(block.size(), 0.0);
  for (std::size_t k = 0; k < block.size(); ++k) est.w[k] = ext.gradient(x, block.first + k);
  return est;
}

double estimate_F(const ValueOracle& f, std::span<const double> x, std::size_t samples, Rng& rng) {
  if (samples == 0) throw std::invalid_argument("estimate_F needs at least one sample");
  double total = 0.0;
  for (std::size_t k = 0; k < samples; ++k) total += f.eval(sample_set(x, rng));
  return total / static_cast<double>(samples);
}

std::size_t required_samples(std::size_t steps, double delta) {
  if (steps == 0) throw std::invalid_argument("required_samples: T must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("required_samples: delta must be in (0, 1)");
  const double t = static_cast<double>(steps);
  const double k = 8.0 * t * t * std::log(2.0 / delta);
  // Snap values that are integral up to rounding noise, e.g. delta = 2/e.
  const double nearest = std::round(k);
  if (std::abs(k - nearest) <= 1e-9 * std::max(1.0, k)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(k));
}

}  // namespace dcg
