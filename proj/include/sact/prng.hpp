/*
 * Copyright 2026 The sact Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

namespace sact {

/// SplitMix64 finalizer.  Used to spread a user seed over the engine state
/// and to derive independent per-trial streams.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// All randomness in the library flows through this wrapper.  The engine is
// std::mt19937_64, whose output sequence is fixed by the C++ standard, and
// bounded draws use mask rejection rather than std::uniform_int_distribution
// (implementation-defined), so identical seeds replay identical transcripts
// on any platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(splitmix64_mix(seed)) {}

  /// Stream for trial `index` of a run seeded with `master`.  Streams are
  /// independent and may be consumed concurrently, one per trial.
  static Prng stream(std::uint64_t master, std::uint64_t index) {
    return Prng(splitmix64_mix(master + (index + 1) * 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = engine_() & mask;
      if (v < n) return v;
    }
  }

  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sact
