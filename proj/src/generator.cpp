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

#include "spa/generator.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <stdexcept>
#include <string>

#include "spa/errors.hpp"
#include "spa/keyed_random.hpp"
#include "spa/spatial_grid.hpp"

namespace spa {

std::string_view to_string(Engine engine) {
  return engine == Engine::Naive ? "naive" : "grid";
}

Engine parse_engine(std::string_view text) {
  if (text == "naive") return Engine::Naive;
  if (text == "grid") return Engine::Grid;
  throw std::invalid_argument("unknown engine '" + std::string(text) + "' (expected grid or naive)");
}

std::vector<std::uint64_t> geometric_snapshot_times(std::uint64_t n) {
  std::vector<std::uint64_t> times;
  for (std::uint64_t div = 1; div <= n && div != 0; div <<= 1) times.push_back((n + div - 1) / div);
  times.push_back(1);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

namespace {

class Process {
 public:
  Process(const ModelParams& params, const GenerateOptions& options)
      : params_(params),
        options_(options),
        metric_(params.metric()),
        random_(params.seed),
        dim_(static_cast<std::size_t>(params.m)),
        grid_(metric_, params.a2) {
    positions_.resize(params.n * dim_);
    weights_.reserve(params.n);
    degree_.reserve(params.n);
    snapshot_times_ = options.snapshot_times;
    std::sort(snapshot_times_.begin(), snapshot_times_.end());
    snapshot_times_.erase(std::unique(snapshot_times_.begin(), snapshot_times_.end()),
                          snapshot_times_.end());
    for (auto t : snapshot_times_) {
      if (t < 1 || t > params.n) throw std::invalid_argument("snapshot time outside [1, n]");
    }
  }

  SpaGraph run() {
    auto next_snapshot = snapshot_times_.begin();
    std::vector<VertexId> hits;
    for (std::uint64_t t = 1; t <= params_.n; ++t) {
      auto x = std::span<double>(positions_).subspan((t - 1) * dim_, dim_);
      random_.position(t, x);

      hits.clear();
      if (t > 1) candidates(t, x, hits);
      for (VertexId u : hits) {
        if (random_.link_uniform(t, u) < params_.p) {
          edges_.push_back({static_cast<VertexId>(t), u});
          if (options_.audit_stride != 0 && edges_.size() % options_.audit_stride == 0) audit(t, u);
        }
      }
      // Degrees change only once every candidate of step t has been decided.
      for (auto it = edges_.rbegin(); it != edges_.rend() && it->source == t; ++it) {
        const VertexId u = it->target;
        ++degree_[u - 1];
        weights_[u - 1] = params_.a1 * degree_[u - 1] + params_.a2;
        if (options_.engine == Engine::Grid) grid_.reweight(u, position(u), weights_[u - 1]);
      }
      degree_.push_back(0);
      weights_.push_back(params_.a2);
      if (options_.engine == Engine::Grid) grid_.insert(static_cast<VertexId>(t), x, params_.a2);

      if (next_snapshot != snapshot_times_.end() && *next_snapshot == t) {
        std::vector<std::uint32_t> degrees(degree_);
        degrees.resize(params_.n, 0);
        snapshots_.emplace(t, std::move(degrees));
        ++next_snapshot;
      }
    }
    std::sort(edges_.begin(), edges_.end());
    return SpaGraph(params_, std::move(positions_), std::move(edges_), std::move(snapshots_));
  }

 private:
  std::span<const double> position(VertexId v) const {
    return std::span<const double>(positions_).subspan((v - 1) * dim_, dim_);
  }

  void candidates(std::uint64_t t, std::span<const double> x, std::vector<VertexId>& out) {
    const double denominator = static_cast<double>(t - 1);
    if (options_.engine == Engine::Grid) {
      grid_.refresh(denominator, positions_);
      grid_.query(x, denominator, positions_, weights_, out);
      return;
    }
    for (VertexId u = 1; u < t; ++u) {
      if (sphere_contains(metric_, x, position(u), weights_[u - 1], denominator)) out.push_back(u);
    }
  }

  void audit(std::uint64_t t, VertexId u) const {
    const auto sphere = sphere_of_influence(params_, u, t - 1, degree_[u - 1]);
    const double d = metric_.distance(position(static_cast<VertexId>(t)), position(u));
    if (!sphere.covers_space() && d > sphere.radius) {
      throw std::logic_error("edge " + std::to_string(t) + "->" + std::to_string(u) +
                             " created outside the sphere of influence");
    }
  }

  ModelParams params_;
  GenerateOptions options_;
  TorusMetric metric_;
  KeyedRandom random_;
  std::size_t dim_;
  SpatialGrid grid_;
  std::vector<double> positions_;
  std::vector<double> weights_;
  std::vector<std::uint32_t> degree_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> snapshot_times_;
  SnapshotMap snapshots_;
};

}  // namespace

SpaGraph generate(const ModelParams& params, const GenerateOptions& options) {
  validate(params);
  try {
    return Process(params, options).run();
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory while generating a graph with n = " +
                        std::to_string(params.n));
  }
}

SpaGraph generate_naive(const ModelParams& params, GenerateOptions options) {
  options.engine = Engine::Naive;
  return generate(params, options);
}

}  // namespace spa
