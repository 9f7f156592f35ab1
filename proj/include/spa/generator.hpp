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
#include <string_view>
#include <vector>

#include "spa/model.hpp"

namespace spa {

enum class Engine { Naive, Grid };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view text);

struct GenerateOptions {
  Engine engine = Engine::Grid;
  // Times t at which the full in-degree vector deg(., t) is recorded.
  std::vector<std::uint64_t> snapshot_times;
  // Re-check the sphere condition of every k-th created edge; 0 disables.
  std::uint64_t audit_stride = 0;
};

// {ceil(n / 2^j) : j >= 0}, ascending and deduplicated.
std::vector<std::uint64_t> geometric_snapshot_times(std::uint64_t n);

/// Runs the process for n steps.
///
/// Step t places v_t at the keyed position for t and, for every u < t whose
/// sphere S(u, t-1) contains it, adds t -> u when the keyed uniform for
/// (t, u) is below p. Degrees are updated only after the step, so every
/// decision in step t sees deg(., t-1). Both engines yield identical graphs.
SpaGraph generate(const ModelParams& params, const GenerateOptions& options = {});

// Exhaustive-scan engine; shorthand for generate() with Engine::Naive.
SpaGraph generate_naive(const ModelParams& params, GenerateOptions options = {});

}  // namespace spa
