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

#include "spa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spa {

AdjacencyIndex::AdjacencyIndex(const SpaGraph& graph) : n_(graph.vertex_count()) {
  in_offset_.assign(n_ + 1, 0);
  out_offset_.assign(n_ + 1, 0);
  for (const Edge& e : graph.edges()) {
    ++in_offset_[e.target];
    ++out_offset_[e.source];
  }
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  in_.resize(graph.edge_count());
  out_.resize(graph.edge_count());
  std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  std::vector<std::size_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  // Edges are sorted by (source, target), so both fills come out sorted.
  for (const Edge& e : graph.edges()) {
    in_[in_fill[e.target - 1]++] = e.source;
    out_[out_fill[e.source - 1]++] = e.target;
  }
}

std::span<const VertexId> AdjacencyIndex::in_neighbours(VertexId v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
  return std::span<const VertexId>(in_).subspan(in_offset_[v - 1], in_offset_[v] - in_offset_[v - 1]);
}

std::span<const VertexId> AdjacencyIndex::out_neighbours(VertexId v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
  return std::span<const VertexId>(out_).subspan(out_offset_[v - 1],
                                                 out_offset_[v] - out_offset_[v - 1]);
}

std::uint32_t common_neighbours(const AdjacencyIndex& index, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("common neighbours of a vertex with itself");
  auto a = index.in_neighbours(u);
  auto b = index.in_neighbours(v);
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint32_t common_neighbours(const SpaGraph& graph, VertexId u, VertexId v) {
  return common_neighbours(AdjacencyIndex(graph), u, v);
}

namespace {

// Calls visit(u, v, cn) for every unordered pair u < v with cn >= min_cn.
template <typename Visit>
void for_each_cocited_pair(const AdjacencyIndex& index, std::uint32_t min_cn, Visit&& visit) {
  const std::uint32_t n = index.vertex_count();
  std::vector<std::uint32_t> counter(n + 1, 0);
  std::vector<VertexId> touched;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId w : index.in_neighbours(u)) {
      auto out = index.out_neighbours(w);
      for (auto it = std::upper_bound(out.begin(), out.end(), u); it != out.end(); ++it) {
        if (counter[*it]++ == 0) touched.push_back(*it);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (VertexId v : touched) {
      if (counter[v] >= min_cn) visit(u, v, counter[v]);
      counter[v] = 0;
    }
    touched.clear();
  }
}

bool passes_close_filter(const SpaGraph& graph, std::uint32_t cn, std::uint32_t k,
                         std::uint32_t ell, double close_ratio) {
  return cn < close_ratio * graph.params().p * std::min(k, ell);
}

void check_filter_args(std::uint32_t min_cn, double close_ratio) {
  if (min_cn < 1) throw std::invalid_argument("min_cn must be >= 1");
  if (!(close_ratio > 0.0 && close_ratio < 1.0)) {
    throw std::invalid_argument("close_ratio must lie in (0,1)");
  }
}

}  // namespace

std::vector<PairEstimate> eligible_pairs(const SpaGraph& graph, const AdjacencyIndex& index,
                                         std::uint32_t min_cn, double close_ratio) {
  check_filter_args(min_cn, close_ratio);
  std::vector<PairEstimate> pairs;
  for_each_cocited_pair(index, min_cn, [&](VertexId u, VertexId v, std::uint32_t cn) {
    const std::uint32_t du = graph.in_degree(u);
    const std::uint32_t dv = graph.in_degree(v);
    if (!passes_close_filter(graph, cn, du, dv, close_ratio)) return;
    PairEstimate pe;
    // Ties keep the older vertex as id_k.
    const bool u_first = du >= dv;
    pe.id_k = u_first ? u : v;
    pe.id_ell = u_first ? v : u;
    pe.k = std::max(du, dv);
    pe.ell = std::min(du, dv);
    pe.cn = cn;
    pairs.push_back(pe);
  });
  return pairs;
}

PairFilterCounts count_pair_filters(const SpaGraph& graph, const AdjacencyIndex& index,
                                    std::uint32_t min_cn, double close_ratio) {
  check_filter_args(min_cn, close_ratio);
  PairFilterCounts counts;
  for_each_cocited_pair(index, min_cn, [&](VertexId u, VertexId v, std::uint32_t cn) {
    ++counts.with_min_cn;
    if (passes_close_filter(graph, cn, graph.in_degree(u), graph.in_degree(v), close_ratio)) {
      ++counts.eligible;
    }
  });
  return counts;
}

std::vector<PairEstimate> estimate_pair_distances(const SpaGraph& graph,
                                                  std::vector<PairEstimate> pairs,
                                                  const EstimateOptions& options) {
  const Theory theory(graph.params());
  const TorusMetric metric = graph.params().metric();
  const double threshold = options.threshold > 0.0 ? options.threshold : theory.default_threshold();
  for (PairEstimate& pe : pairs) {
    if (pe.cn == 0) throw std::invalid_argument("pair without common neighbours cannot be estimated");
    if (pe.k < pe.ell) {
      std::swap(pe.k, pe.ell);
      std::swap(pe.id_k, pe.id_ell);
    }
    const double i_k = theory.f_inv(pe.k);
    const double i_ell = theory.f_inv(pe.ell);
    pe.d_actual = metric.distance(graph.position(pe.id_k), graph.position(pe.id_ell));
    pe.d_hat = theory.d_hat_basic(pe.cn, i_k, i_ell);
    pe.d_hat_adjusted = theory.d_hat_adjusted(pe.cn, i_k, i_ell, options.c_weight);
    pe.regime = theory.classify_pair(pe.k, pe.ell, pe.d_actual, threshold, options.epsilon);
  }
  return pairs;
}

std::vector<double> alpha_grid(double alpha_min, double alpha_max, double alpha_step) {
  if (!(alpha_step > 0.0)) throw std::invalid_argument("alpha step must be positive");
  if (!(alpha_min >= 0.0) || alpha_max < alpha_min) throw std::invalid_argument("bad alpha range");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((alpha_max - alpha_min) / alpha_step + 0.5));
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(alpha_min + static_cast<double>(i) * alpha_step);
  return grid;
}

EdgeLengthCurve edge_length_survival(const SpaGraph& graph, std::span<const double> alphas) {
  if (alphas.empty()) throw std::invalid_argument("alpha grid is empty");
  const Theory theory(graph.params());
  const TorusMetric metric = graph.params().metric();
  std::vector<double> lengths;
  lengths.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    lengths.push_back(metric.distance(graph.position(e.source), graph.position(e.target)));
  }
  std::sort(lengths.begin(), lengths.end());

  EdgeLengthCurve curve;
  for (double alpha : alphas) {
    EdgeLengthRow row;
    row.alpha = alpha;
    row.r_alpha = theory.r_alpha(alpha);
    row.e_alpha = static_cast<std::uint64_t>(
        lengths.end() - std::lower_bound(lengths.begin(), lengths.end(), row.r_alpha));
    row.e_alpha_predicted = theory.e_alpha_predicted(alpha);
    row.log_slope_predicted = theory.e_alpha_log_slope(alpha);
    curve.rows.push_back(row);
  }
  return curve;
}

std::uint64_t DegreeHistogram::vertex_total() const {
  std::uint64_t total = 0;
  for (const auto& [k, count] : counts) total += count;
  return total;
}

std::uint64_t DegreeHistogram::edge_mass() const {
  std::uint64_t total = 0;
  for (const auto& [k, count] : counts) total += k * count;
  return total;
}

std::uint64_t DegreeHistogram::count(std::uint32_t k) const {
  auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

DegreeHistogram degree_histogram(const SpaGraph& graph) {
  DegreeHistogram h;
  for (std::uint32_t k : graph.in_degrees()) ++h.counts[k];
  return h;
}

PowerLawFit powerlaw_fit(const DegreeHistogram& histogram, std::uint32_t k_min,
                         std::uint32_t k_max) {
  if (k_min < 1 || k_min >= k_max) throw std::invalid_argument("empty power-law fit range");
  const double total = static_cast<double>(histogram.vertex_total());
  // Tail counts P[deg >= k] for every k in range.
  std::vector<double> tail(k_max - k_min + 1, 0.0);
  for (auto it = histogram.counts.lower_bound(k_min); it != histogram.counts.end(); ++it) {
    const std::uint32_t upto = std::min(it->first, k_max);
    for (std::uint32_t k = k_min; k <= upto; ++k) tail[k - k_min] += static_cast<double>(it->second);
  }
  std::vector<std::uint32_t> ks;
  for (double x = k_min; x <= k_max + 1e-9; x *= std::pow(10.0, 0.05)) {
    const auto k = static_cast<std::uint32_t>(std::lround(x));
    if (k <= k_max && (ks.empty() || ks.back() != k)) ks.push_back(k);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t points = 0;
  for (std::uint32_t k : ks) {
    const double t = tail[k - k_min];
    if (t <= 0.0) continue;
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(t / total);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++points;
  }
  if (points < 2) throw std::invalid_argument("empty power-law fit range");
  const double np = static_cast<double>(points);
  PowerLawFit fit;
  fit.points = points;
  fit.slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / np;
  fit.exponent = 1.0 - fit.slope;
  return fit;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty data");
  std::sort(values.begin(), values.end());
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double TrajectoryReport::quantile(double q) const { return spa::quantile(deviations, q); }

TrajectoryReport trajectory_check(const SpaGraph& graph, const TrajectoryOptions& options) {
  if (graph.snapshots().empty()) throw std::invalid_argument("graph has no degree snapshots");
  if (options.degree_floor < 1) throw std::invalid_argument("degree floor must be >= 1");
  const Theory theory(graph.params());
  const std::uint32_t n = graph.vertex_count();
  TrajectoryReport report;
  for (VertexId v = 1; v <= n; ++v) {
    const std::uint32_t k = graph.in_degree(v);
    if (k < options.degree_floor) continue;
    ++report.vertices;
    const double t_k = options.threshold ? theory.trajectory_start(k, *options.threshold) : 0.0;
    for (const auto& [t, degrees] : graph.snapshots()) {
      const double dt = static_cast<double>(t);
      if (dt < options.min_time || dt < t_k || t < v) continue;
      if (t == n && !options.include_final) continue;
      const double expected = theory.degree_trajectory(k, dt);
      report.deviations.push_back(std::abs(degrees[v - 1] - expected) / expected);
    }
  }
  std::sort(report.deviations.begin(), report.deviations.end());
  return report;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("correlation needs two equally sized samples of size >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace spa
