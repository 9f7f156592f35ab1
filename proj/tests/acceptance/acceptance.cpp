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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spa/analysis.hpp"
#include "spa/generator.hpp"
#include "spa/theory.hpp"

namespace {

using namespace spa;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ModelParams reference_params(double p, std::uint64_t seed = 42) {
  ModelParams mp;
  mp.n = 100000;
  mp.p = p;
  mp.a1 = 1.0;
  mp.a2 = 1.0;
  mp.m = 2;
  mp.norm = Norm::L2;
  mp.seed = seed;
  return mp;
}

// Least-squares slope of log_n e(alpha) against alpha over [lo, hi].
double edge_log_slope(const SpaGraph& g, double lo, double hi) {
  const auto curve = edge_length_survival(g, alpha_grid(lo, hi, 0.01));
  const double log_n = std::log(static_cast<double>(g.vertex_count()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
  for (const auto& row : curve.rows) {
    if (row.e_alpha == 0) continue;
    const double y = std::log(static_cast<double>(row.e_alpha)) / log_n;
    sx += row.alpha;
    sy += y;
    sxx += row.alpha * row.alpha;
    sxy += row.alpha * y;
    ++k;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double bisect(const std::function<double(double)>& g, double lo, double hi) {
  const bool rising = g(hi) > g(lo);
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    ((g(mid) > 0) == rising ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

void engine_equivalence() {
  const auto start = Clock::now();
  int matches = 0, runs = 0;
  for (double p : {0.3, 0.95}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ModelParams mp;
      mp.n = 2000;
      mp.p = p;
      mp.seed = seed;
      GenerateOptions o;
      o.snapshot_times = geometric_snapshot_times(mp.n);
      matches += generate(mp, o) == generate_naive(mp, o);
      ++runs;
    }
  }
  const double secs = seconds_since(start);
  report(1, "grid engine equals naive engine", matches == runs && secs < 60.0,
         fmt("%d/%d identical graphs in %.1f s", matches, runs, secs));
}

void expectation_monte_carlo() {
  const auto start = Clock::now();
  constexpr int kRuns = 2000;
  constexpr VertexId kVertex = 50;
  ModelParams mp;
  mp.n = 2000;
  mp.p = 0.5;
  double sum = 0, sumsq = 0;
  for (int r = 1; r <= kRuns; ++r) {
    mp.seed = static_cast<std::uint64_t>(r);
    const double d = generate(mp).in_degree(kVertex);
    sum += d;
    sumsq += d * d;
  }
  const double mean = sum / kRuns;
  const double sd = std::sqrt((sumsq - kRuns * mean * mean) / (kRuns - 1));
  const double se = sd / std::sqrt(double(kRuns));
  const double expected = Theory(mp).expected_indegree_exact(kVertex, mp.n);
  const double z = (mean - expected) / se;
  const double secs = seconds_since(start);
  report(2, "mean in-degree of v_50 matches the exact expectation", std::abs(z) <= 3.0 && secs < 300,
         fmt("mean %.4f vs %.4f, SE %.4f, z = %.2f, %.1f s", mean, expected, se, z, secs));
}

void reference_graph_criteria() {
  const auto mp = reference_params(0.95);
  const Theory theory(mp);
  GenerateOptions o;
  o.snapshot_times = geometric_snapshot_times(mp.n);
  auto start = Clock::now();
  const SpaGraph g = generate(mp, o);
  const double gen_secs = seconds_since(start);

  // 3: total edges.
  const double target_edges = 1.9e6;
  report(3, "total edges within 10% of 1.9e6", rel(double(g.edge_count()), target_edges) <= 0.10,
         fmt("|E| = %zu (%.1f%% off), closed form %.0f, generated in %.1f s", g.edge_count(),
             100 * rel(double(g.edge_count()), target_edges), theory.expected_total_edges(), gen_secs));

  // 4: degree distribution.
  const auto hist = degree_histogram(g);
  const double n0 = double(hist.count(0)) / mp.n;
  const double c0 = 1.0 / 1.95;
  const auto fit = powerlaw_fit(hist, 20, 500);
  const bool n0_ok = rel(n0, c0) <= 0.02;
  const bool fit_ok = std::abs(fit.exponent - 2.0526) <= 0.2;
  report(4, "N_0/n and power-law exponent", n0_ok && fit_ok,
         fmt("N_0/n = %.5f vs %.5f (%.2f%% off); CCDF exponent %.4f vs 2.0526", n0, c0,
             100 * rel(n0, c0), fit.exponent));

  // 5: distance estimation.
  start = Clock::now();
  const AdjacencyIndex index(g);
  const auto counts = count_pair_filters(g, index, 20, 0.5);
  auto pairs = estimate_pair_distances(g, eligible_pairs(g, index, 20, 0.5));
  std::vector<double> d_hat, d_actual, err_basic, err_adjusted;
  for (const auto& pe : pairs) {
    d_hat.push_back(pe.d_hat);
    d_actual.push_back(pe.d_actual);
    err_basic.push_back(std::abs(pe.d_hat - pe.d_actual) / pe.d_actual);
    err_adjusted.push_back(std::abs(pe.d_hat_adjusted - pe.d_actual) / pe.d_actual);
  }
  const bool count1_ok = rel(double(counts.with_min_cn), 19200.0) <= 0.30;
  const bool count2_ok = rel(double(counts.eligible), 2400.0) <= 0.30;
  const double corr = pairs.size() >= 2 ? pearson_correlation(d_hat, d_actual) : 0.0;
  const double med_basic = pairs.empty() ? INFINITY : quantile(err_basic, 0.5);
  const double med_adjusted = pairs.empty() ? INFINITY : quantile(err_adjusted, 0.5);
  const double pair_secs = seconds_since(start);
  report(5, "pair counts within 30% of 19200 / 2400", count1_ok && count2_ok,
         fmt("cn >= 20: %zu; also cn < (p/2) min degree: %zu (%.1f s)", counts.with_min_cn,
             counts.eligible, pair_secs));
  report(5, "correlation of d_hat with true distance >= 0.9", corr >= 0.9,
         fmt("Pearson r = %.4f over %zu pairs", corr, pairs.size()));
  report(5, "adjusted estimate median error <= basic estimate median error",
         med_adjusted <= med_basic,
         fmt("median relative error adjusted (c = 0.005) %.4f, basic %.4f", med_adjusted, med_basic));

  // 7: trajectory concentration.
  TrajectoryOptions to;
  to.min_time = mp.n / 4.0;
  to.include_final = false;
  to.degree_floor = 200;
  const auto main_report = trajectory_check(g, to);
  const double p95 = main_report.quantile(0.95);
  std::string medians;
  std::vector<double> med;
  for (std::uint32_t floor : {50u, 200u, 800u}) {
    to.degree_floor = floor;
    med.push_back(trajectory_check(g, to).median());
    medians += fmt(" k>=%u: %.4f", floor, med.back());
  }
  const bool decreasing = med[0] > med[1] && med[1] > med[2];
  report(7, "degree trajectories concentrate", p95 <= 0.25 && decreasing,
         fmt("p95 deviation %.4f over %zu vertices, %zu samples; medians%s", p95,
             main_report.vertices, main_report.deviations.size(), medians.c_str()));
}

void edge_length_criteria() {
  const SpaGraph g8 = generate(reference_params(0.8));
  const auto row = edge_length_survival(g8, std::vector<double>{1.2}).rows.front();
  const double share = double(row.e_alpha) / double(g8.edge_count());
  report(6, "p=0.8: e(1.2)/|E| >= 0.95", share >= 0.95,
         fmt("e(1.2) = %llu of %zu edges (%.4f)", (unsigned long long)row.e_alpha, g8.edge_count(),
             share));

  const double slope8 = edge_log_slope(g8, 0.87, 0.99);
  report(6, "p=0.8: log-slope over [0.87, 0.99] within 0.12 of 0.25", std::abs(slope8 - 0.25) <= 0.12,
         fmt("slope of log_n e(alpha) = %.4f (log10 slope %.4f)", slope8, slope8 * 5.0));

  // Long edges thin out as alpha falls towards 0.
  const auto curve = edge_length_survival(g8, alpha_grid(0.0, 0.8, 0.05));
  bool monotone = true;
  for (std::size_t i = 1; i < curve.rows.size(); ++i) monotone &= curve.rows[i].e_alpha >= curve.rows[i - 1].e_alpha;
  report(6, "p=0.8: e(alpha) decays monotonically as alpha decreases", monotone,
         fmt("e(0) = %llu, e(0.8) = %llu", (unsigned long long)curve.rows.front().e_alpha,
             (unsigned long long)curve.rows.back().e_alpha));

  const SpaGraph g3 = generate(reference_params(0.3));
  const double slope3 = edge_log_slope(g3, 0.3, 0.8);
  report(6, "p=0.3: log-slope over [0.3, 0.8] within 0.2 of 1", std::abs(slope3 - 1.0) <= 0.2,
         fmt("slope of log_n e(alpha) = %.4f", slope3));
}

void theory_self_consistency() {
  const auto start = Clock::now();
  double worst_f = 0, worst_cn = 0, worst_adj = 0, worst_t = 0, worst_ck = 0;
  for (double p : {0.3, 0.5, 0.8, 0.95}) {
    for (int m : {1, 2, 3}) {
      ModelParams mp = reference_params(p);
      mp.m = m;
      const Theory th(mp);
      const double cm = mp.metric().unit_ball_volume();
      const double pa1 = mp.pa1();
      for (double x = 1e-3; x <= 1e9; x *= 3.1) worst_f = std::max(worst_f, rel(th.f_inv(th.f(x)), x));
      for (double i_k : {2.0, 40.0}) {
        for (double i_ell : {100.0, 3000.0}) {
          for (double d : {0.003, 0.05, 0.3}) {
            worst_cn = std::max(worst_cn, rel(th.d_hat_basic(th.cn_predicted(i_k, i_ell, d), i_k, i_ell), d));
            // Overlap times from the concentrated radii.
            auto radius = [&](double i, double t) {
              return std::pow(mp.a2 * std::pow(t / i, pa1) / (cm * t), 1.0 / m);
            };
            auto root = [&](double dist, double sign) {
              return std::exp(bisect([&](double lt) {
                const double t = std::exp(lt);
                return radius(i_k, t) + sign * radius(i_ell, t) - dist;
              }, -200.0, 400.0));
            };
            const auto geom = th.t_minus_plus(i_k, i_ell, d);
            worst_t = std::max({worst_t, rel(geom.t_minus, root(d, -1)), rel(geom.t_plus, root(d, +1))});
            const double cn = 25.0;
            const double c = 0.005;
            const double oracle = std::exp(bisect([&](double ld) {
              const double dd = std::exp(ld);
              const auto tt = th.t_minus_plus(i_k, i_ell, dd);
              const double s = mp.p * mp.a2 / mp.a1;
              return (1 - c) * s * std::pow(tt.t_minus / i_ell, pa1) +
                     c * s * std::pow(tt.t_plus / i_ell, pa1) - cn;
            }, std::log(1e-12), std::log(10.0)));
            worst_adj = std::max(worst_adj, rel(th.d_hat_adjusted(cn, i_k, i_ell, c), oracle));
          }
        }
      }
      if (m == 2) worst_ck = std::max(worst_ck, std::abs(th.ck_exact(10000) / th.ck_asymptotic(10000) - 1));
    }
  }
  const bool ok = worst_f <= 1e-10 && worst_cn <= 1e-9 && worst_adj <= 1e-9 && worst_t <= 1e-6 &&
                  worst_ck <= 0.05;
  report(8, "theory self-consistency", ok,
         fmt("f/f_inv %.1e, cn/d_hat %.1e, adjusted vs bisection %.1e, t-/t+ vs root %.1e, "
             "c_k ratio at 1e4 off by %.4f (%.2f s)",
             worst_f, worst_cn, worst_adj, worst_t, worst_ck, seconds_since(start)));
}

void metric_suite() {
  for (Norm norm : {Norm::L2, Norm::Linf}) {
    std::mt19937_64 rng(norm == Norm::L2 ? 101 : 202);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    long violations = 0;
    constexpr int kInstances = 20000;
    for (int trial = 0; trial < kInstances; ++trial) {
      const int m = 1 + trial % 4;
      const TorusMetric metric(m, norm);
      std::vector<double> a(m), b(m), c(m), shifted(m);
      for (int i = 0; i < m; ++i) {
        a[i] = u(rng), b[i] = u(rng), c[i] = u(rng);
      }
      const double ab = metric.distance(a, b);
      violations += ab != metric.distance(b, a);
      violations += ab > metric.distance(a, c) + metric.distance(c, b) + 1e-12;
      violations += ab < 0 || ab > metric.max_distance() + 1e-12;
      // Wrap-around: shifting both points by the same offset mod 1 keeps the distance,
      // and the distance equals the nearest of the integer translates.
      const double s = u(rng);
      std::vector<double> a2(m), b2(m);
      double nearest = 0;
      for (int i = 0; i < m; ++i) {
        a2[i] = std::fmod(a[i] + s, 1.0);
        b2[i] = std::fmod(b[i] + s, 1.0);
        const double raw = std::abs(a[i] - b[i]);
        const double dd = std::min({raw, std::abs(a[i] - b[i] - 1), std::abs(a[i] - b[i] + 1)});
        nearest = norm == Norm::L2 ? nearest + dd * dd : std::max(nearest, dd);
      }
      if (norm == Norm::L2) nearest = std::sqrt(nearest);
      violations += std::abs(metric.distance(a2, b2) - ab) > 1e-12;
      violations += std::abs(nearest - ab) > 1e-12;
      const double v = u(rng);
      violations += std::abs(metric.ball_volume(metric.radius_for_volume(v)) - v) > 1e-12;
    }
    report(9, norm == Norm::L2 ? "torus metric properties (L2)" : "torus metric properties (Linf)",
           violations == 0, fmt("%d random instances, %ld violations", kInstances, violations));
  }
}

}  // namespace

int main() {
  const auto start = Clock::now();
  metric_suite();
  theory_self_consistency();
  engine_equivalence();
  expectation_monte_carlo();
  reference_graph_criteria();
  edge_length_criteria();
  std::printf("%s: %d failing check(s), %.1f s total\n", failures ? "FAILED" : "ALL PASSED", failures,
              seconds_since(start));
  return failures ? 1 : 0;
}
