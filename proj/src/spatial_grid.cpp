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

#include "spa/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spa {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

// Slack on query radii so floating-point rounding in the cell arithmetic can
// never drop a vertex that the exact predicate would accept.
double padded(double radius) { return radius * (1.0 + 1e-9) + 1e-15; }

}  // namespace

SpatialGrid::SpatialGrid(TorusMetric metric, double a2, std::size_t cell_budget)
    : metric_(metric), a2_(a2) {
  if (!(a2 > 0.0)) throw std::invalid_argument("A2 must be positive");
  const double per_axis = std::pow(static_cast<double>(std::max<std::size_t>(cell_budget, 1)),
                                   1.0 / metric_.dim());
  max_cells_per_axis_ = std::max(1, static_cast<int>(std::floor(per_axis + 1e-9)));
}

std::size_t SpatialGrid::level_of(double weight) const {
  const double ratio = weight / a2_;
  if (!(ratio >= 1.0)) return 0;
  int exponent = 0;
  std::frexp(ratio, &exponent);  // ratio = f * 2^exponent, f in [0.5, 1)
  return static_cast<std::size_t>(exponent - 1);
}

double SpatialGrid::level_weight_bound(std::size_t level) const {
  return std::ldexp(a2_, static_cast<int>(level) + 1);
}

double SpatialGrid::level_radius(std::size_t level, double denominator) const {
  const double w = level_weight_bound(level);
  if (w >= denominator) return std::numeric_limits<double>::infinity();
  return metric_.radius_for_volume(w / denominator);
}

double SpatialGrid::max_radius(double denominator) const {
  for (std::size_t j = levels_.size(); j-- > 0;) {
    if (levels_[j].count > 0) return level_radius(j, denominator);
  }
  return 0.0;
}

std::size_t SpatialGrid::cell_of(const Level& level, std::span<const double> pos) const {
  const int g = level.cells_per_axis;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (int axis = 0; axis < metric_.dim(); ++axis) {
    int c = static_cast<int>(pos[static_cast<std::size_t>(axis)] * g);
    c = std::clamp(c, 0, g - 1);
    index += static_cast<std::size_t>(c) * stride;
    stride *= static_cast<std::size_t>(g);
  }
  return index;
}

void SpatialGrid::place(VertexId v, std::span<const double> pos, std::size_t level) {
  if (level >= levels_.size()) levels_.resize(level + 1);
  Level& lv = levels_[level];
  const std::size_t cell = cell_of(lv, pos);
  lv.cells[cell].push_back(v);
  ++lv.count;
  level_of_vertex_[v - 1] = static_cast<std::uint32_t>(level);
  cell_of_vertex_[v - 1] = static_cast<std::uint32_t>(cell);
}

void SpatialGrid::remove(VertexId v) {
  Level& lv = levels_[level_of_vertex_[v - 1]];
  auto& bucket = lv.cells[cell_of_vertex_[v - 1]];
  auto it = std::find(bucket.begin(), bucket.end(), v);
  *it = bucket.back();
  bucket.pop_back();
  --lv.count;
  level_of_vertex_[v - 1] = kAbsent;
}

void SpatialGrid::insert(VertexId v, std::span<const double> pos, double weight) {
  if (v < 1) throw std::invalid_argument("vertex ids start at 1");
  if (v > level_of_vertex_.size()) {
    level_of_vertex_.resize(v, kAbsent);
    cell_of_vertex_.resize(v, 0);
  }
  if (level_of_vertex_[v - 1] != kAbsent) throw std::invalid_argument("vertex already indexed");
  place(v, pos, level_of(weight));
  ++size_;
}

void SpatialGrid::reweight(VertexId v, std::span<const double> pos, double new_weight) {
  const std::size_t level = level_of(new_weight);
  if (level == level_of_vertex_.at(v - 1)) return;
  remove(v);
  place(v, pos, level);
}

void SpatialGrid::rebuild(std::size_t level, int cells_per_axis,
                          std::span<const double> positions) {
  Level& lv = levels_[level];
  std::vector<VertexId> members;
  members.reserve(lv.count);
  for (auto& bucket : lv.cells) members.insert(members.end(), bucket.begin(), bucket.end());

  std::size_t total = 1;
  for (int axis = 0; axis < metric_.dim(); ++axis) total *= static_cast<std::size_t>(cells_per_axis);
  lv.cells_per_axis = cells_per_axis;
  lv.cells.assign(total, {});

  const auto m = static_cast<std::size_t>(metric_.dim());
  for (VertexId v : members) {
    auto pos = positions.subspan((v - 1) * m, m);
    const std::size_t cell = cell_of(lv, pos);
    lv.cells[cell].push_back(v);
    cell_of_vertex_[v - 1] = static_cast<std::uint32_t>(cell);
  }
}

void SpatialGrid::refresh(double denominator, std::span<const double> positions) {
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const double r = level_radius(j, denominator);
    if (!std::isfinite(r)) continue;
    const double ideal = std::floor(1.0 / padded(r));
    const int wanted = static_cast<int>(std::clamp(ideal, 1.0, double(max_cells_per_axis_)));
    if (wanted >= 2 * levels_[j].cells_per_axis) rebuild(j, wanted, positions);
  }
}

void SpatialGrid::query(std::span<const double> x, double denominator,
                        std::span<const double> positions, std::span<const double> weights,
                        std::vector<VertexId>& out) const {
  const std::size_t first = out.size();
  const int dim = metric_.dim();
  const auto m = static_cast<std::size_t>(dim);
  std::vector<int> start(m), span_len(m), offset(m);

  auto visit = [&](const std::vector<VertexId>& bucket) {
    for (VertexId v : bucket) {
      if (sphere_contains(metric_, x, positions.subspan((v - 1) * m, m), weights[v - 1],
                          denominator)) {
        out.push_back(v);
      }
    }
  };

  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    if (lv.count == 0) continue;
    const int g = lv.cells_per_axis;
    const double r = level_radius(j, denominator);
    if (!std::isfinite(r) || g == 1) {
      for (const auto& bucket : lv.cells) visit(bucket);
      continue;
    }
    const double reach = padded(r);
    for (std::size_t axis = 0; axis < m; ++axis) {
      const int lo = static_cast<int>(std::floor((x[axis] - reach) * g));
      const int hi = static_cast<int>(std::floor((x[axis] + reach) * g));
      if (hi - lo + 1 >= g) {
        start[axis] = 0;
        span_len[axis] = g;
      } else {
        start[axis] = lo;
        span_len[axis] = hi - lo + 1;
      }
      offset[axis] = 0;
    }
    // Odometer over the box of cells, wrapping each axis onto [0, g).
    while (true) {
      std::size_t index = 0;
      std::size_t stride = 1;
      for (std::size_t axis = 0; axis < m; ++axis) {
        int c = (start[axis] + offset[axis]) % g;
        if (c < 0) c += g;
        index += static_cast<std::size_t>(c) * stride;
        stride *= static_cast<std::size_t>(g);
      }
      visit(lv.cells[index]);
      std::size_t axis = 0;
      while (axis < m && ++offset[axis] == span_len[axis]) offset[axis++] = 0;
      if (axis == m) break;
    }
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

}  // namespace spa
