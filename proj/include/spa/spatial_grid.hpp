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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spa/model.hpp"
#include "spa/torus_metric.hpp"

namespace spa {

/// Sphere-membership index for the generator.
///
/// Vertices are bucketed into weight levels, level j holding weights
/// A1*deg + A2 in [A2*2^j, A2*2^{j+1}). Every radius in a level is bounded by
/// the radius of its upper weight, so each level keeps its own uniform torus
/// grid with cells no narrower than that bound and a query only visits the
/// cells within the bound. Radii shrink as the denominator grows; refresh()
/// rebuilds a level once its cells could be halved.
class SpatialGrid {
 public:
  SpatialGrid(TorusMetric metric, double a2, std::size_t cell_budget = std::size_t{1} << 22);

  void insert(VertexId v, std::span<const double> pos, double weight);
  // Moves `v` to the level of `new_weight` if it changed level.
  void reweight(VertexId v, std::span<const double> pos, double new_weight);

  // Re-grids levels that have become coarse for spheres evaluated at
  // `denominator`. `positions` is the flat m-per-vertex array, index v-1.
  void refresh(double denominator, std::span<const double> positions);

  /// Appends to `out`, in ascending id order, exactly those vertices whose
  /// sphere (weight weights[v-1] over `denominator`) contains x.
  void query(std::span<const double> x, double denominator, std::span<const double> positions,
             std::span<const double> weights, std::vector<VertexId>& out) const;

  std::size_t size() const noexcept { return size_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  int cells_per_axis(std::size_t level) const { return levels_.at(level).cells_per_axis; }

  // Upper bound on the radius of any indexed sphere at `denominator`;
  // infinity when some sphere may cover the whole torus.
  double max_radius(double denominator) const;

 private:
  struct Level {
    int cells_per_axis = 1;
    std::size_t count = 0;
    std::vector<std::vector<VertexId>> cells{1};
  };

  std::size_t level_of(double weight) const;
  double level_weight_bound(std::size_t level) const;
  double level_radius(std::size_t level, double denominator) const;
  std::size_t cell_of(const Level& level, std::span<const double> pos) const;
  void place(VertexId v, std::span<const double> pos, std::size_t level);
  void remove(VertexId v);
  void rebuild(std::size_t level, int cells_per_axis, std::span<const double> positions);

  TorusMetric metric_;
  double a2_;
  int max_cells_per_axis_;
  std::size_t size_ = 0;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> level_of_vertex_;
  std::vector<std::uint32_t> cell_of_vertex_;
};

}  // namespace spa
