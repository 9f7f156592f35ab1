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

#include "spa/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spa/errors.hpp"

namespace spa {

ModelParams validate(const ModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be positive");
  if (params.m < 1) throw std::invalid_argument("dimension m must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (!(params.a1 > 0.0) || !std::isfinite(params.a1)) {
    throw std::invalid_argument("A1 must be positive");
  }
  if (!(params.a2 > 0.0) || !std::isfinite(params.a2)) {
    throw std::invalid_argument("A2 must be positive");
  }
  if (!(params.pa1() < 1.0)) {
    std::ostringstream os;
    os << "p*A1 < 1 violated: p*A1 = " << params.pa1();
    throw ConstraintError(os.str());
  }
  return params;
}

SphereState sphere_of_influence(const ModelParams& params, VertexId v, std::uint64_t t,
                                std::uint64_t in_degree) {
  if (v < 1) throw std::invalid_argument("vertex ids start at 1");
  if (t < v) throw std::invalid_argument("sphere evaluated before the vertex is born");
  SphereState s;
  s.vertex = v;
  s.volume = std::min(1.0, (params.a1 * static_cast<double>(in_degree) + params.a2) /
                               static_cast<double>(t));
  s.radius = params.metric().radius_for_volume(s.volume);
  return s;
}

SpaGraph::SpaGraph(ModelParams params, std::vector<double> positions, std::vector<Edge> edges,
                   SnapshotMap snapshots)
    : params_(validate(params)),
      positions_(std::move(positions)),
      edges_(std::move(edges)),
      snapshots_(std::move(snapshots)) {
  const std::size_t n = params_.n;
  if (positions_.size() != n * static_cast<std::size_t>(params_.m)) {
    throw std::invalid_argument("position array does not hold n*m coordinates");
  }
  for (double c : positions_) {
    if (!(c >= 0.0 && c < 1.0)) throw std::invalid_argument("vertex coordinate outside [0,1)");
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
  in_degree_.assign(n, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.target < 1 || e.source > n) throw std::invalid_argument("edge endpoint out of range");
    if (e.source <= e.target) {
      throw std::invalid_argument("edge " + std::to_string(e.source) + "->" +
                                  std::to_string(e.target) + " does not point to an older vertex");
    }
    if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("duplicate edge");
    ++in_degree_[e.target - 1];
  }
  for (const auto& [t, degrees] : snapshots_) {
    if (t < 1 || t > n) throw std::invalid_argument("snapshot time out of range");
    if (degrees.size() != n) throw std::invalid_argument("snapshot does not cover n vertices");
  }
}

std::span<const double> SpaGraph::position(VertexId v) const {
  if (v < 1 || v > params_.n) throw std::out_of_range("vertex id out of range");
  const auto m = static_cast<std::size_t>(params_.m);
  return std::span<const double>(positions_).subspan((v - 1) * m, m);
}

TorusPoint SpaGraph::point(VertexId v) const {
  auto pos = position(v);
  return TorusPoint(std::vector<double>(pos.begin(), pos.end()));
}

std::uint32_t SpaGraph::in_degree(VertexId v) const {
  if (v < 1 || v > params_.n) throw std::out_of_range("vertex id out of range");
  return in_degree_[v - 1];
}

}  // namespace spa
