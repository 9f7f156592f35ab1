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

#include "spa/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spa {

std::string_view to_string(PairRegime regime) {
  switch (regime) {
    case PairRegime::TooFar:
      return "too_far";
    case PairRegime::TooClose:
      return "too_close";
    case PairRegime::Estimable:
      return "estimable";
  }
  return "?";
}

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

// log Gamma(x+a) - log Gamma(x) for x > 0, 0 <= a <= 1, without the
// cancellation of two large lgamma values. Small x is shifted up by the
// recurrence, then the Stirling series of the difference is summed.
double log_gamma_ratio(double x, double a) {
  double shift = 0.0;
  while (x < 20.0) {
    shift -= std::log1p(a / x);
    x += 1.0;
  }
  const double y = x + a;
  // (y - 1/2) log y - (x - 1/2) log x - a, regrouped to stay accurate.
  double value = (x - 0.5) * std::log1p(a / x) + a * std::log(y) - a;
  // Bernoulli terms B_{2k} / (2k (2k-1)) applied to y^{1-2k} - x^{1-2k}.
  constexpr double kCoef[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188};
  double py = 1.0 / y, px = 1.0 / x;
  const double y2 = py * py, x2 = px * px;
  for (double c : kCoef) {
    value += c * (py - px);
    py *= y2;
    px *= x2;
  }
  return value + shift;
}

}  // namespace

Theory::Theory(const ModelParams& params)
    : params_(validate(params)),
      pa1_(params.pa1()),
      cm_(params.metric().unit_ball_volume()),
      n_(static_cast<double>(params.n)) {}

double Theory::default_threshold() const { return 20.0 * std::log(n_); }

double Theory::expected_indegree_exact(std::uint64_t i, std::uint64_t t) const {
  if (i < 1) throw std::invalid_argument("birth time must be >= 1");
  if (i > t) throw std::invalid_argument("time precedes birth");
  // log prod_{j=i}^{t-1} (1 + a/j) = log Gamma(t+a)/Gamma(t) - log Gamma(i+a)/Gamma(i)
  const double a = pa1_;
  double log_prod = 0.0;
  if (t - i <= 64) {
    for (std::uint64_t j = i; j < t; ++j) log_prod += std::log1p(a / static_cast<double>(j));
  } else {
    log_prod = log_gamma_ratio(static_cast<double>(t), a) - log_gamma_ratio(static_cast<double>(i), a);
  }
  return params_.a2 / params_.a1 * std::expm1(log_prod);
}

double Theory::expected_indegree_asymptotic(double i, double t) const {
  require_positive(i, "birth time");
  const double ratio = params_.a2 / params_.a1;
  return ratio * std::pow(t / i, pa1_) - ratio;
}

double Theory::f(double i) const {
  require_positive(i, "birth time");
  return params_.a2 / params_.a1 * std::pow(n_ / i, pa1_);
}

double Theory::f_inv(double k) const {
  require_positive(k, "degree");
  if (pa1_ <= 0.0) throw std::domain_error("f is constant when p*A1 = 0");
  return n_ * std::pow(params_.a2 / (params_.a1 * k), 1.0 / pa1_);
}

double Theory::degree_trajectory(double k, double t) const {
  if (t > n_) throw std::invalid_argument("trajectory time exceeds n");
  return k * std::pow(t / n_, pa1_);
}

double Theory::trajectory_start(double k, double threshold) const {
  require_positive(threshold, "threshold");
  return f_inv(params_.a2 * k / (params_.a1 * threshold));
}

double Theory::ck_exact(std::uint64_t k) const {
  const double p = params_.p;
  const double a1 = params_.a1;
  const double a2 = params_.a2;
  if (k == 0) return 1.0 / (1.0 + p * a2);
  if (p == 0.0) return 0.0;
  const double dk = static_cast<double>(k);
  double log_c = dk * std::log(p) - std::log1p(dk * p * a1 + p * a2);
  for (std::uint64_t j = 0; j < k; ++j) {
    const double dj = static_cast<double>(j);
    log_c += std::log(dj * a1 + a2) - std::log1p(dj * p * a1 + p * a2);
  }
  return std::exp(log_c);
}

double Theory::powerlaw_constant() const {
  if (pa1_ <= 0.0) throw std::domain_error("power law undefined when p*A1 = 0");
  const double r = params_.a2 / params_.a1;
  return std::exp(std::lgamma(r + 1.0 / pa1_) - std::lgamma(r)) / pa1_;
}

double Theory::ck_asymptotic(double k) const {
  if (!(k >= 1.0)) throw std::invalid_argument("asymptotic c_k needs k >= 1");
  return powerlaw_constant() * std::pow(k, -1.0 - 1.0 / pa1_);
}

double Theory::degree_exponent() const {
  if (pa1_ <= 0.0) throw std::domain_error("power law undefined when p*A1 = 0");
  return 1.0 + 1.0 / pa1_;
}

double Theory::expected_total_edges() const {
  return params_.p * params_.a2 * n_ / (1.0 - pa1_);
}

PairGeometry Theory::t_minus_plus(double i_k, double i_ell, double d) const {
  require_positive(i_k, "i_k");
  require_positive(i_ell, "i_ell");
  if (i_k > i_ell) throw std::invalid_argument("t-/t+ need i_k <= i_ell");
  if (d == 0.0) throw std::domain_error("t-/t+ are singular at distance 0");
  require_positive(d, "distance");
  const double m = params_.m;
  const double e = 1.0 / (1.0 - pa1_);
  const double base = std::pow(params_.a2 / cm_, e) * std::pow(i_k, -pa1_ * e) * std::pow(d, -m * e);
  const double rho = std::pow(i_k / i_ell, pa1_ / m);
  PairGeometry g;
  g.i_k = i_k;
  g.i_ell = i_ell;
  g.d = d;
  g.t_minus = base * std::pow(1.0 - rho, m * e);
  g.t_plus = base * std::pow(1.0 + rho, m * e);
  return g;
}

double Theory::cn_constant() const {
  const double e = 1.0 / (1.0 - pa1_);
  return params_.p / params_.a1 * std::pow(params_.a2, e) * std::pow(cm_, -pa1_ * e);
}

double Theory::cn_predicted(double i_k, double i_ell, double d) const {
  require_positive(i_k, "i_k");
  require_positive(i_ell, "i_ell");
  require_positive(d, "distance");
  const double e = 1.0 / (1.0 - pa1_);
  return cn_constant() * std::pow(i_k, -pa1_ * pa1_ * e) * std::pow(i_ell, -pa1_) *
         std::pow(d, -params_.m * pa1_ * e);
}

double Theory::estimator_constant() const {
  const double m = params_.m;
  return std::pow(params_.p / params_.a1, (1.0 - pa1_) / (m * pa1_)) *
         std::pow(params_.a2, 1.0 / (m * pa1_)) * std::pow(cm_, -1.0 / m);
}

double Theory::d_hat_basic(double cn, double i_k, double i_ell) const {
  require_positive(cn, "common-neighbour count");
  require_positive(i_k, "i_k");
  require_positive(i_ell, "i_ell");
  const double m = params_.m;
  return estimator_constant() * std::pow(i_k, -pa1_ / m) * std::pow(i_ell, -(1.0 - pa1_) / m) *
         std::pow(cn, -(1.0 - pa1_) / (m * pa1_));
}

double Theory::d_hat_adjusted(double cn, double i_k, double i_ell, double c_weight) const {
  require_positive(cn, "common-neighbour count");
  require_positive(i_k, "i_k");
  require_positive(i_ell, "i_ell");
  if (i_k > i_ell) throw std::invalid_argument("adjusted estimator needs i_k <= i_ell");
  if (!(c_weight >= 0.0 && c_weight <= 1.0)) throw std::invalid_argument("c_weight must lie in [0,1]");
  const double m = params_.m;
  const double e = 1.0 / (1.0 - pa1_);
  const double rho = std::pow(i_k / i_ell, pa1_ / m);
  const double scale = cn_constant() * std::pow(i_k, -pa1_ * pa1_ * e) * std::pow(i_ell, -pa1_);
  const double beta_minus = scale * std::pow(1.0 - rho, m * pa1_ * e);
  const double beta_plus = scale * std::pow(1.0 + rho, m * pa1_ * e);
  const double beta = (1.0 - c_weight) * beta_minus + c_weight * beta_plus;
  return std::pow(beta / cn, (1.0 - pa1_) / (m * pa1_));
}

double Theory::too_close_bound(double k, double ell) const {
  const double m = params_.m;
  const double denom = cm_ * n_;
  return std::pow((params_.a1 * k + params_.a2) / denom, 1.0 / m) -
         std::pow((params_.a1 * ell + params_.a2) / denom, 1.0 / m);
}

double Theory::too_far_bound(double ell, double threshold, double epsilon) const {
  require_positive(threshold, "threshold");
  const double birth = f_inv(ell / threshold);
  return epsilon * std::pow(threshold / birth, 1.0 / params_.m);
}

PairRegime Theory::classify_pair(double k, double ell, double d, double threshold,
                                 double epsilon) const {
  if (!(k >= ell && ell >= 1.0)) throw std::invalid_argument("classify_pair needs k >= ell >= 1");
  if (d <= too_close_bound(k, ell)) return PairRegime::TooClose;
  if (d >= too_far_bound(ell, threshold, epsilon)) return PairRegime::TooFar;
  return PairRegime::Estimable;
}

double Theory::r_alpha(double alpha) const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  return std::pow(std::pow(n_, -alpha) / cm_, 1.0 / params_.m);
}

double Theory::e_alpha_window_start() const { return 1.0 - pa1_ / (4.0 * pa1_ + 2.0); }

std::optional<double> Theory::e_alpha_predicted(double alpha) const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  if (alpha > 1.0) return expected_total_edges();
  if (!(pa1_ > 0.5 && pa1_ < 1.0)) return std::nullopt;
  if (!(alpha > e_alpha_window_start() && alpha < 1.0)) return std::nullopt;
  const double a1 = params_.a1;
  const double r = params_.a2 / a1;
  const double q = 1.0 - pa1_;
  const double gamma_ratio = std::exp(std::lgamma(r + 1.0 / pa1_) - std::lgamma(r));
  const double mid = std::pow(q, 3) / (2.0 * pa1_ - 1.0) * std::pow(a1, (1.0 - 2.0 * pa1_) / (q * pa1_));
  const double constant = gamma_ratio * std::pow(a1, pa1_ / q) / q * (mid + 1.0 - pa1_ * q);
  const double exponent = 2.0 - 1.0 / pa1_ + alpha * q / pa1_;
  return constant * std::pow(n_, exponent);
}

std::optional<double> Theory::e_alpha_log_slope(double alpha) const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  if (alpha >= 1.0) return 1.0;
  if (pa1_ < 0.5) return alpha;
  if (pa1_ == 0.5) return std::nullopt;
  const double q = 1.0 - pa1_;
  if (alpha > q) return 2.0 - 1.0 / pa1_ + alpha * q / pa1_;
  return alpha * pa1_ / q;
}

}  // namespace spa
