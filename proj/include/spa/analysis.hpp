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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "spa/model.hpp"
#include "spa/theory.hpp"

namespace spa {

/// In- and out-neighbour lists of a graph in CSR form, each list sorted by
/// birth index.
class AdjacencyIndex {
 public:
  explicit AdjacencyIndex(const SpaGraph& graph);

  std::span<const VertexId> in_neighbours(VertexId v) const;
  std::span<const VertexId> out_neighbours(VertexId v) const;
  std::uint32_t vertex_count() const noexcept { return n_; }

 private:
  std::uint32_t n_;
  std::vector<std::size_t> in_offset_, out_offset_;
  std::vector<VertexId> in_, out_;
};

// Number of vertices linking to both u and v.
std::uint32_t common_neighbours(const AdjacencyIndex& index, VertexId u, VertexId v);
std::uint32_t common_neighbours(const SpaGraph& graph, VertexId u, VertexId v);

struct PairEstimate {
  VertexId id_k = 0;    // the endpoint with the larger final in-degree
  VertexId id_ell = 0;  // the other endpoint
  std::uint32_t k = 0;
  std::uint32_t ell = 0;
  std::uint32_t cn = 0;
  PairRegime regime = PairRegime::Estimable;
  double d_actual = 0.0;
  double d_hat = 0.0;
  double d_hat_adjusted = 0.0;
};

/// Unordered pairs with min_cn <= cn < close_ratio * p * min(k, ell), sorted
/// by (min id, max id). Candidates come from inverting the adjacency, so only
/// pairs with at least one common neighbour are ever touched.
std::vector<PairEstimate> eligible_pairs(const SpaGraph& graph, const AdjacencyIndex& index,
                                         std::uint32_t min_cn = 20, double close_ratio = 0.5);

// Counts of the two filter stages.
struct PairFilterCounts {
  std::size_t with_min_cn = 0;
  std::size_t eligible = 0;
};
PairFilterCounts count_pair_filters(const SpaGraph& graph, const AdjacencyIndex& index,
                                    std::uint32_t min_cn = 20, double close_ratio = 0.5);

struct EstimateOptions {
  double c_weight = 0.005;
  // Stand-in for omega log n when classifying; <= 0 selects 20 ln n.
  double threshold = 0.0;
  double epsilon = 1.0;
};

std::vector<PairEstimate> estimate_pair_distances(const SpaGraph& graph,
                                                  std::vector<PairEstimate> pairs,
                                                  const EstimateOptions& options = {});

struct EdgeLengthRow {
  double alpha = 0.0;
  double r_alpha = 0.0;
  std::uint64_t e_alpha = 0;
  std::optional<double> e_alpha_predicted;
  std::optional<double> log_slope_predicted;
};

struct EdgeLengthCurve {
  std::vector<EdgeLengthRow> rows;
};

// min, min+step, ... up to max inclusive (within half a step).
std::vector<double> alpha_grid(double alpha_min, double alpha_max, double alpha_step);

EdgeLengthCurve edge_length_survival(const SpaGraph& graph, std::span<const double> alphas);

struct DegreeHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;  // k -> N_k

  std::uint64_t vertex_total() const;
  std::uint64_t edge_mass() const;  // sum k * N_k
  std::uint64_t count(std::uint32_t k) const;
};

DegreeHistogram degree_histogram(const SpaGraph& graph);

struct PowerLawFit {
  double exponent = 0.0;  // 1 - slope
  double slope = 0.0;     // of log CCDF against log k
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (log k, log P[deg >= k]) on a log-spaced set of
/// integer k in [k_min, k_max].
PowerLawFit powerlaw_fit(const DegreeHistogram& histogram, std::uint32_t k_min,
                         std::uint32_t k_max);

struct TrajectoryOptions {
  std::uint32_t degree_floor = 200;
  // Only snapshots with t >= min_time are used.
  double min_time = 0.0;
  // When set, also require t >= t_k computed with this threshold.
  std::optional<double> threshold;
  bool include_final = true;
};

struct TrajectoryReport {
  std::vector<double> deviations;  // one per (vertex, snapshot), sorted
  std::size_t vertices = 0;

  double quantile(double q) const;
  double max() const { return deviations.empty() ? 0.0 : deviations.back(); }
  double median() const { return quantile(0.5); }
};

/// Relative deviation |deg(v,t) - k (t/n)^{pA1}| / (k (t/n)^{pA1}) over every
/// vertex with final degree k >= degree_floor and every qualifying snapshot.
TrajectoryReport trajectory_check(const SpaGraph& graph, const TrajectoryOptions& options = {});

double pearson_correlation(std::span<const double> x, std::span<const double> y);
// Linear-interpolated quantile of unsorted data.
double quantile(std::vector<double> values, double q);

}  // namespace spa
