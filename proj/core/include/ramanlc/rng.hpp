// Copyright 2026 The ramanlc Authors
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

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ramanlc {

// Per-task random streams derived from (master seed, stream index), so that
// ensembles are reproducible and independent of execution order.
//
// xoshiro256++ seeded through splitmix64; all distributions are hand-rolled
// on top of raw 64-bit draws to keep byte-level results independent of the
// standard library implementation.
class Rng {
 public:
  Rng(std::uint64_t master_seed, std::uint64_t stream_index) {
    // splitmix64 over the pair; the multiplier decorrelates adjacent streams.
    std::uint64_t x = master_seed ^ (stream_index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  explicit Rng(std::uint64_t master_seed) : Rng(master_seed, 0) {}

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; the quantum-jump threshold draw.
  double uniform_open_closed() { return 1.0 - uniform(); }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; unbuffered so stream state stays a pure function of draw count.
  double normal(double mean = 0.0, double sigma = 1.0) {
    const double u1 = uniform_open_closed();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny compared to 2^64.
    return next_u64() % n;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace ramanlc
