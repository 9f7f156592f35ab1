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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spa {

enum class Norm { L2, Linf };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

/// A point of the unit torus [0,1)^m. Coordinates outside [0,1) are rejected,
/// never wrapped.
class TorusPoint {
 public:
  explicit TorusPoint(std::vector<double> coords);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  double operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::vector<double> coords_;
};

/// Wrap-around geometry of the unit hypercube under the L2 or L-infinity norm.
///
/// Per coordinate the separation is min(|a-b|, 1-|a-b|); the separations are
/// then combined by the norm. Ball volumes are c_m r^m capped at 1, where c_m
/// is the volume of the unit ball (pi^{m/2}/Gamma(m/2+1) for L2, 2^m for Linf).
class TorusMetric {
 public:
  TorusMetric(int dim, Norm norm);

  int dim() const noexcept { return dim_; }
  Norm norm() const noexcept { return norm_; }
  double unit_ball_volume() const noexcept { return unit_ball_volume_; }

  double distance(const TorusPoint& a, const TorusPoint& b) const;
  // Unchecked variant used on hot paths; both spans must have dim() entries.
  double distance(std::span<const double> a, std::span<const double> b) const noexcept;

  double ball_volume(double radius) const;
  double radius_for_volume(double volume) const;

  // Largest distance attainable between two torus points.
  double max_distance() const noexcept;

  friend bool operator==(const TorusMetric& a, const TorusMetric& b) noexcept {
    return a.dim_ == b.dim_ && a.norm_ == b.norm_;
  }

 private:
  int dim_;
  Norm norm_;
  double unit_ball_volume_;
};

}  // namespace spa
