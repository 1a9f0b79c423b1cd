// Copyright 2026 The toystab Authors
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

#ifndef TOYSTAB_RNG_HPP
#define TOYSTAB_RNG_HPP

#include <cstdint>
#include <random>

namespace toystab {

/// Seeded, splittable PRNG. One engine draw is consumed per outcome bit, in
/// program order, so traces are reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// One fair outcome bit (one engine draw).
  bool bit() { return engine_() & 1; }

  /// Uniform draw from [0, n). Rejection sampled, unbiased.
  uint64_t below(uint64_t n) {
    if (n <= 1) {
      return 0;
    }
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % n;
  }

  /// Independent child stream; consumes one draw from the parent.
  Rng split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toystab

#endif  // TOYSTAB_RNG_HPP
