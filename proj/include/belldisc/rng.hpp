// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLDISC_RNG_HPP
#define BELLDISC_RNG_HPP

#include <cstdint>
#include <random>

namespace belldisc {

// Stateless mixer used to derive independent substream seeds from a user
// seed. Every Monte Carlo routine in this project owns a (seed, stream)
// pair, so results are reproducible and independent of thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream));
}

// Uniform double in [0, 1) with 53 random bits. Hand-rolled instead of
// std::uniform_real_distribution so that the value sequence is identical
// across standard library implementations.
inline double uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace belldisc

#endif
