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
#include <optional>
#include <string_view>

#include "spa/model.hpp"

namespace spa {

enum class PairRegime { TooFar, TooClose, Estimable };

std::string_view to_string(PairRegime regime);

struct PairGeometry {
  double i_k = 0.0;    // nominal birth time of the higher-degree vertex
  double i_ell = 0.0;  // nominal birth time of the lower-degree vertex
  double d = 0.0;
  double t_minus = 0.0;  // smaller sphere first pokes out of the larger one
  double t_plus = 0.0;   // spheres stop overlapping
};

/// Closed-form predictions for one parameter set. All members are pure.
///
/// Throughout, pA1 = p*A1 is the growth exponent and n the final time. The
/// finite stand-in for the asymptotic "omega log n" threshold is an explicit
/// argument wherever it matters; default_threshold() gives 20 ln n.
class Theory {
 public:
  explicit Theory(const ModelParams& params);

  const ModelParams& params() const noexcept { return params_; }
  double pa1() const noexcept { return pa1_; }
  double unit_ball_volume() const noexcept { return cm_; }
  double default_threshold() const;

  // --- degree growth -------------------------------------------------------

  /// E deg(v_i, t) = (A2/A1) * (prod_{j=i}^{t-1} (1 + pA1/j) - 1), ignoring the
  /// volume cap. Evaluated through log-gamma.
  double expected_indegree_exact(std::uint64_t i, std::uint64_t t) const;
  // (A2/A1)(t/i)^{pA1} - A2/A1.
  double expected_indegree_asymptotic(double i, double t) const;

  double f(double i) const;
  double f_inv(double k) const;

  // k (t/n)^{pA1}.
  double degree_trajectory(double k, double t) const;
  // t_k = f_inv(A2 k / (A1 * threshold)): from here on the trajectory holds.
  double trajectory_start(double k, double threshold) const;

  // --- degree distribution -------------------------------------------------

  double ck_exact(std::uint64_t k) const;
  double ck_asymptotic(double k) const;
  // c = (1/pA1) Gamma(A2/A1 + 1/pA1) / Gamma(A2/A1).
  double powerlaw_constant() const;
  // 1 + 1/pA1.
  double degree_exponent() const;
  // p A2 n / (1 - pA1).
  double expected_total_edges() const;

  // --- common neighbours -----------------------------------------------------

  PairGeometry t_minus_plus(double i_k, double i_ell, double d) const;
  double cn_predicted(double i_k, double i_ell, double d) const;
  // Prefactor C of the common-neighbour law.
  double cn_constant() const;
  // Prefactor C' of the basic distance estimator.
  double estimator_constant() const;
  double d_hat_basic(double cn, double i_k, double i_ell) const;
  /// Solves (1-c) L(d) + c U(d) = cn where L, U are p deg(v_ell, t-/+) along
  /// the concentrated trajectory. Both scale as d^{-m pA1/(1-pA1)}, so the
  /// root is closed form.
  double d_hat_adjusted(double cn, double i_k, double i_ell, double c_weight = 0.005) const;

  // Degree-only bounds on the distance separating the three regimes.
  double too_close_bound(double k, double ell) const;
  double too_far_bound(double ell, double threshold, double epsilon = 1.0) const;
  /// TooClose wins ties with the nested-sphere bound; TooFar starts at
  /// epsilon * (threshold / T)^{1/m}, T = f_inv(ell / threshold).
  PairRegime classify_pair(double k, double ell, double d, double threshold,
                           double epsilon = 1.0) const;

  // --- edge lengths ----------------------------------------------------------

  double r_alpha(double alpha) const;
  // Lower edge of the alpha window with a concentrated prediction below 1.
  double e_alpha_window_start() const;
  /// Number of edges of length >= r_alpha, where a concentrated prediction
  /// exists; std::nullopt in the gap regimes.
  std::optional<double> e_alpha_predicted(double alpha) const;
  // log E e(alpha) / log n; std::nullopt where no exponent is known.
  std::optional<double> e_alpha_log_slope(double alpha) const;

 private:
  ModelParams params_;
  double pa1_;
  double cm_;
  double n_;
};

}  // namespace spa
