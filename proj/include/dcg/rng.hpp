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
#include <random>

namespace dcg {

/// What a random stream is used for. Part of the stream key so that the
/// gradient samples and the final rounding of one agent never share draws.
enum class StreamPurpose : std::uint64_t {
  gradient = 1,
  rounding = 2,
  estimate = 3,
  scenario = 4,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combination of two 64-bit keys.
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value);

/// Seeded random stream. Doubles are built from the top 53 bits of the
/// engine output so that a seed yields the same sequence on every platform
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  /// Stream keyed by (base, step, purpose); `base` is usually an agent seed.
  static Rng stream(std::uint64_t base, std::uint64_t step, StreamPurpose purpose);

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of agent `agent` under master seed `master`.
std::uint64_t agent_seed(std::uint64_t master, std::uint64_t agent);

}  // namespace dcg
