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

// Deterministic seeded randomness. Everything downstream (generators,
// rounding, estimators, the benchmark runner) draws from labeled substreams
// derived here, so results are reproducible across runs and thread counts.

#pragma once

#include <cstdint>
#include <string_view>

namespace submax::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (stateless avalanche of a 64-bit value).
inline std::uint64_t mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small sequential PRNG (SplitMix64 chain). Not cryptographic; fine for
// sampling and rounding.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Fixed-point multiply keeps the draw
  // platform independent; bias is < 2^-64 per draw.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

// Derives an independent substream seed from a master seed, a textual label
// and up to three integer coordinates. Streams for different labels or
// coordinates do not collide in practice, so adding a new consumer never
// perturbs existing draws.
inline std::uint64_t derive(std::uint64_t master, std::string_view label,
                            std::uint64_t a = 0, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the label
  for (char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::uint64_t s = mix(master ^ h);
  s = mix(s ^ (a + 1) * kGolden);
  s = mix(s ^ (b + 2) * kGolden);
  s = mix(s ^ (c + 3) * kGolden);
  return s;
}

// Per-sample substream used by the Monte-Carlo estimators: sample i always
// sees the same draws no matter how samples are scheduled.
inline Stream substream(std::uint64_t seed, std::uint64_t index) {
  return Stream(mix(seed ^ (index + 1) * kGolden));
}

}  // namespace submax::rng
