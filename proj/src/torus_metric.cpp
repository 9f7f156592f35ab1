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

#include "spa/torus_metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spa {

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::L2:
      return "l2";
    case Norm::Linf:
      return "linf";
  }
  return "?";
}

Norm parse_norm(std::string_view text) {
  if (text == "l2" || text == "L2") return Norm::L2;
  if (text == "linf" || text == "Linf" || text == "LINF") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected l2 or linf)");
}

TorusPoint::TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("torus point needs at least one coordinate");
  for (double c : coords_) {
    if (!(c >= 0.0 && c < 1.0)) {
      throw std::invalid_argument("torus coordinate " + std::to_string(c) + " outside [0,1)");
    }
  }
}

TorusMetric::TorusMetric(int dim, Norm norm) : dim_(dim), norm_(norm) {
  if (dim < 1) throw std::invalid_argument("torus dimension must be >= 1");
  if (norm == Norm::Linf) {
    unit_ball_volume_ = std::ldexp(1.0, dim);
  } else {
    const double half = 0.5 * dim;
    unit_ball_volume_ = std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
  }
}

double TorusMetric::distance(const TorusPoint& a, const TorusPoint& b) const {
  if (a.dim() != dim_ || b.dim() != dim_) {
    throw std::invalid_argument("point dimension does not match metric dimension " +
                                std::to_string(dim_));
  }
  return distance(a.coords(), b.coords());
}

double TorusMetric::distance(std::span<const double> a, std::span<const double> b) const noexcept {
  double acc = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double sep = std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    sep = std::min(sep, 1.0 - sep);
    if (norm_ == Norm::Linf) {
      acc = std::max(acc, sep);
    } else {
      acc += sep * sep;
    }
  }
  return norm_ == Norm::Linf ? acc : std::sqrt(acc);
}

double TorusMetric::ball_volume(double radius) const {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball radius must be non-negative");
  return std::min(1.0, unit_ball_volume_ * std::pow(radius, dim_));
}

double TorusMetric::radius_for_volume(double volume) const {
  if (!(volume >= 0.0 && volume <= 1.0)) {
    throw std::invalid_argument("ball volume must lie in [0,1]");
  }
  return std::pow(volume / unit_ball_volume_, 1.0 / dim_);
}

double TorusMetric::max_distance() const noexcept {
  return norm_ == Norm::Linf ? 0.5 : 0.5 * std::sqrt(static_cast<double>(dim_));
}

}  // namespace spa
