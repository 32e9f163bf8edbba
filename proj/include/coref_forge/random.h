// Copyright 2026 The coref-forge Authors.
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

// Portable seeding helpers. std::mt19937_64 output is fixed by the standard
// but the <random> distributions are not, so bounded draws are done here.

#ifndef COREF_FORGE_RANDOM_H_
#define COREF_FORGE_RANDOM_H_

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace coref_forge {

using Rng = std::mt19937_64;

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed for copy `copy` of document `doc_id` under a plan seed.
inline uint64_t DeriveSeed(uint64_t plan_seed, std::string_view doc_id,
                           uint64_t copy) {
  uint64_t h = SplitMix64(plan_seed);
  h = SplitMix64(h ^ Fnv1a64(doc_id));
  return SplitMix64(h ^ copy);
}

// Uniform integer in [0, n) by rejection; n must be positive.
inline uint64_t UniformIndex(Rng& rng, uint64_t n) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace coref_forge

#endif  // COREF_FORGE_RANDOM_H_
