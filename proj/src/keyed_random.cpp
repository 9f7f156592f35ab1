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

#include "spa/keyed_random.hpp"

namespace spa {

namespace {
constexpr std::uint64_t kLinkStream = 0x6c696e6b00000001ULL;      // "link"
constexpr std::uint64_t kPositionStream = 0x706f730000000002ULL;  // "pos"
}  // namespace

std::uint64_t KeyedRandom::bits(std::uint64_t stream, std::uint64_t a,
                                std::uint64_t b) const noexcept {
  std::uint64_t h = mix64(seed_ ^ mix64(stream));
  h = mix64(h ^ a);
  h = mix64(h + 0x632be59bd9b4e019ULL * (b + 1));
  return mix64(h);
}

double KeyedRandom::link_uniform(std::uint64_t t, std::uint64_t u) const noexcept {
  return to_unit(bits(kLinkStream, t, u));
}

double KeyedRandom::position_coord(std::uint64_t t, std::uint64_t axis) const noexcept {
  return to_unit(bits(kPositionStream, t, axis));
}

void KeyedRandom::position(std::uint64_t t, std::span<double> out) const noexcept {
  for (std::size_t axis = 0; axis < out.size(); ++axis) out[axis] = position_coord(t, axis);
}

}  // namespace spa
