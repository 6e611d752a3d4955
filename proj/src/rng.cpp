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

#include "dcg/rng.hpp"

namespace dcg {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (mix64(value) + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

Rng Rng::stream(std::uint64_t base, std::uint64_t step, StreamPurpose purpose) {
  auto key = hash_combine(base, step);
  key = hash_combine(key, static_cast<std::uint64_t>(purpose));
  return Rng(key);
}

std::uint64_t agent_seed(std::uint64_t master, std::uint64_t agent) {
  return hash_combine(mix64(master), agent);
}

}  // namespace dcg
