// Copyright 2026 The spa-graph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>

namespace spa {

/// Counter-based randomness: every draw is a pure function of
/// (seed, stream, t[, u]), so results never depend on iteration order or on
/// which index structure enumerated the candidates.
class KeyedRandom {
 public:
  explicit KeyedRandom(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform [0,1) deciding the candidate link t -> u.
  double link_uniform(std::uint64_t t, std::uint64_t u) const noexcept;

  // Uniform [0,1) coordinate `axis` of the vertex born at time t.
  double position_coord(std::uint64_t t, std::uint64_t axis) const noexcept;
  void position(std::uint64_t t, std::span<double> out) const noexcept;

  // Raw 64-bit hash of the key; exposed for statistical tests.
  std::uint64_t bits(std::uint64_t stream, std::uint64_t a, std::uint64_t b) const noexcept;

 private:
  std::uint64_t seed_;
};

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Top 53 bits mapped onto [0,1).
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace spa
