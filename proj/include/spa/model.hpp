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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "spa/torus_metric.hpp"

namespace spa {

// Vertices are identified by birth time, 1..n.
using VertexId = std::uint32_t;

struct ModelParams {
  std::uint32_t n = 1;
  double p = 0.5;
  double a1 = 1.0;
  double a2 = 1.0;
  int m = 2;
  Norm norm = Norm::L2;
  std::uint64_t seed = 0;

  TorusMetric metric() const { return TorusMetric(m, norm); }
  double pa1() const noexcept { return p * a1; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Returns `params` unchanged if it describes a valid model. Throws
/// ConstraintError when p*A1 >= 1 and std::invalid_argument for any other
/// out-of-range field.
ModelParams validate(const ModelParams& params);

struct SphereState {
  VertexId vertex = 0;
  double volume = 0.0;
  double radius = 0.0;

  // A capped sphere is the whole torus, not merely a ball of volume 1.
  bool covers_space() const noexcept { return volume >= 1.0; }
};

/// Sphere of influence of `v` at time `t` given its in-degree at `t`:
/// volume min(1, (A1*deg + A2)/t).
SphereState sphere_of_influence(const ModelParams& params, VertexId v, std::uint64_t t,
                                std::uint64_t in_degree);

// Membership test shared by every generator engine. `weight` is A1*deg + A2
// and `denominator` the time the sphere is evaluated at.
inline bool sphere_contains(const TorusMetric& metric, std::span<const double> x,
                            std::span<const double> centre, double weight,
                            double denominator) {
  if (weight >= denominator) return true;
  return metric.distance(x, centre) <= metric.radius_for_volume(weight / denominator);
}

struct Edge {
  VertexId source = 0;  // younger endpoint
  VertexId target = 0;  // older endpoint

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using SnapshotMap = std::map<std::uint64_t, std::vector<std::uint32_t>>;

/// Immutable result of one run of the process. Edges are kept sorted by
/// (source, target); positions are stored flat, m doubles per vertex.
class SpaGraph {
 public:
  SpaGraph(ModelParams params, std::vector<double> positions, std::vector<Edge> edges,
           SnapshotMap snapshots = {});

  const ModelParams& params() const noexcept { return params_; }
  std::uint32_t vertex_count() const noexcept { return params_.n; }
  int dim() const noexcept { return params_.m; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const double> position(VertexId v) const;
  TorusPoint point(VertexId v) const;
  std::span<const double> positions() const noexcept { return positions_; }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::uint32_t in_degree(VertexId v) const;
  std::span<const std::uint32_t> in_degrees() const noexcept { return in_degree_; }

  // Snapshot time -> in-degree of every vertex (index v-1) at that time.
  const SnapshotMap& snapshots() const noexcept { return snapshots_; }

  friend bool operator==(const SpaGraph&, const SpaGraph&) = default;

 private:
  ModelParams params_;
  std::vector<double> positions_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> in_degree_;
  SnapshotMap snapshots_;
};

}  // namespace spa
