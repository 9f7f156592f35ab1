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

// spa: command-line front end for generating and measuring SPA graphs.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 verification
// failure, 3 I/O or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spa/analysis.hpp"
#include "spa/csv.hpp"
#include "spa/errors.hpp"
#include "spa/generator.hpp"
#include "spa/graph_io.hpp"
#include "spa/theory.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;

struct ModelFlags {
  std::uint32_t n = 100000;
  double p = 0.95;
  double a1 = 1.0;
  double a2 = 1.0;
  int m = 2;
  std::string norm = "l2";
  std::uint64_t seed = 1;

  void attach(CLI::App* app, bool with_seed) {
    app->add_option("--n", n, "Number of vertices (final time)")->capture_default_str();
    app->add_option("--p", p, "Link probability")->capture_default_str();
    app->add_option("--a1", a1, "Degree coefficient A1")->capture_default_str();
    app->add_option("--a2", a2, "Base volume coefficient A2")->capture_default_str();
    app->add_option("--m", m, "Torus dimension")->capture_default_str();
    app->add_option("--norm", norm, "Norm: l2 or linf")
        ->check(CLI::IsMember({"l2", "linf"}))
        ->capture_default_str();
    if (with_seed) app->add_option("--seed", seed, "Random seed")->capture_default_str();
  }

  spa::ModelParams params() const {
    spa::ModelParams mp;
    mp.n = n;
    mp.p = p;
    mp.a1 = a1;
    mp.a2 = a2;
    mp.m = m;
    mp.norm = spa::parse_norm(norm);
    mp.seed = seed;
    return spa::validate(mp);
  }
};

// Writes to `path`, or stdout when the path is empty or "-".
template <typename Body>
void with_output(const std::string& path, Body&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw spa::IoError("cannot open " + path + " for writing");
  body(out);
  if (!out) throw spa::IoError("failed writing " + path);
}

void print_theory(const spa::Theory& theory, const std::string& what, std::optional<double> k,
                  std::optional<double> ell, std::optional<double> d) {
  const auto& mp = theory.params();
  const double n = mp.n;
  auto num = [](double v) { return spa::format_real(v); };
  if (what == "edges") {
    std::printf("%.10g\n", theory.expected_total_edges());
  } else if (what == "f") {
    std::cout << "i,f,expected_indegree_exact\n";
    for (double i = n; i >= 1.0; i /= 10.0) {
      const auto ii = static_cast<std::uint64_t>(i);
      std::cout << ii << ',' << num(theory.f(ii)) << ','
                << num(theory.expected_indegree_exact(ii, mp.n)) << '\n';
    }
  } else if (what == "ck") {
    std::cout << "k,ck_exact,ck_asymptotic\n";
    for (std::uint64_t kk : {0, 1, 2, 3, 5, 10, 20, 50, 100, 200, 500, 1000, 10000}) {
      std::cout << kk << ',' << num(theory.ck_exact(kk)) << ','
                << (kk >= 1 ? num(theory.ck_asymptotic(kk)) : std::string()) << '\n';
    }
    std::cout << "# exponent " << num(theory.degree_exponent()) << ", constant "
              << num(theory.powerlaw_constant()) << '\n';
  } else if (what == "ealpha") {
    std::cout << "alpha,r_alpha,e_alpha_predicted,log_slope_predicted\n";
    for (double alpha : spa::alpha_grid(0.0, 1.5, 0.05)) {
      auto e = theory.e_alpha_predicted(alpha);
      auto s = theory.e_alpha_log_slope(alpha);
      std::cout << num(alpha) << ',' << num(theory.r_alpha(alpha)) << ','
                << (e ? num(*e) : std::string()) << ',' << (s ? num(*s) : std::string()) << '\n';
    }
  } else if (what == "cn") {
    std::cout << "C," << num(theory.cn_constant()) << '\n';
    std::cout << "C_prime," << num(theory.estimator_constant()) << '\n';
    if (k && ell && d) {
      const double i_k = theory.f_inv(*k);
      const double i_ell = theory.f_inv(*ell);
      std::cout << "i_k," << num(i_k) << "\ni_l," << num(i_ell) << '\n';
      std::cout << "cn_predicted," << num(theory.cn_predicted(i_k, i_ell, *d)) << '\n';
      std::cout << "regime,"
                << spa::to_string(theory.classify_pair(*k, *ell, *d, theory.default_threshold()))
                << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial preferred attachment graph generator and analysis toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a graph and write it as a graph file");
  ModelFlags gen_flags;
  gen_flags.attach(gen, true);
  std::string engine = "grid";
  std::string snapshots = "none";
  std::string gen_out;
  gen->add_option("--engine", engine, "grid or naive")
      ->check(CLI::IsMember({"grid", "naive"}))
      ->capture_default_str();
  gen->add_option("--snapshots", snapshots, "Degree snapshots: geometric or none")
      ->check(CLI::IsMember({"geometric", "none"}))
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output graph file (stdout if omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Measure a generated graph");
  analyze->require_subcommand(1);
  std::string graph_path;
  std::string analyze_out;

  auto* distance = analyze->add_subcommand("distance", "Co-citation distance estimates");
  std::uint32_t min_cn = 20;
  double close_ratio = 0.5;
  double c_weight = 0.005;
  double threshold = 0.0;
  distance->add_option("--graph", graph_path, "Graph file")->required();
  distance->add_option("--min-cn", min_cn, "Minimum common neighbours")->capture_default_str();
  distance->add_option("--close-ratio", close_ratio, "Keep pairs with cn < ratio*p*min degree")
      ->capture_default_str();
  distance->add_option("--c-weight", c_weight, "Convex weight of the upper bound")
      ->capture_default_str();
  distance->add_option("--threshold", threshold, "Regime threshold (default 20 ln n)");
  distance->add_option("--out", analyze_out, "Output CSV (stdout if omitted)");

  auto* edges = analyze->add_subcommand("edges", "Edge-length survival counts e(alpha)");
  double alpha_min = 0.0, alpha_max = 1.5, alpha_step = 0.01;
  edges->add_option("--graph", graph_path, "Graph file")->required();
  edges->add_option("--alpha-min", alpha_min)->capture_default_str();
  edges->add_option("--alpha-max", alpha_max)->capture_default_str();
  edges->add_option("--alpha-step", alpha_step)->capture_default_str();
  edges->add_option("--out", analyze_out, "Output CSV (stdout if omitted)");

  auto* degrees = analyze->add_subcommand("degrees", "In-degree histogram against c_k");
  degrees->add_option("--graph", graph_path, "Graph file")->required();
  degrees->add_option("--out", analyze_out, "Output CSV (stdout if omitted)");

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "Print closed-form predictions");
  ModelFlags theory_flags;
  theory_flags.attach(theory_cmd, false);
  std::string print = "edges";
  std::optional<double> opt_k, opt_l, opt_d;
  theory_cmd->add_option("--print", print, "f, ck, edges, ealpha or cn")
      ->check(CLI::IsMember({"f", "ck", "edges", "ealpha", "cn"}))
      ->capture_default_str();
  theory_cmd->add_option("--k", opt_k, "Larger final degree (cn)");
  theory_cmd->add_option("--l", opt_l, "Smaller final degree (cn)");
  theory_cmd->add_option("--d", opt_d, "Distance (cn)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check that the grid and naive engines agree");
  ModelFlags verify_flags;
  verify_flags.n = 2000;
  verify_flags.attach(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      spa::GenerateOptions options;
      options.engine = spa::parse_engine(engine);
      const auto params = gen_flags.params();
      if (snapshots == "geometric") options.snapshot_times = spa::geometric_snapshot_times(params.n);
      const auto graph = spa::generate(params, options);
      with_output(gen_out, [&](std::ostream& os) { spa::write_graph(graph, os); });
      std::cerr << "generated n=" << graph.vertex_count() << " edges=" << graph.edge_count() << '\n';
    } else if (*analyze) {
      const auto graph = spa::read_graph(std::filesystem::path(graph_path));
      if (*distance) {
        const spa::AdjacencyIndex index(graph);
        auto pairs = spa::eligible_pairs(graph, index, min_cn, close_ratio);
        spa::EstimateOptions options;
        options.c_weight = c_weight;
        options.threshold = threshold;
        pairs = spa::estimate_pair_distances(graph, std::move(pairs), options);
        with_output(analyze_out, [&](std::ostream& os) { spa::write_pairs_csv(pairs, os); });
      } else if (*edges) {
        const auto alphas = spa::alpha_grid(alpha_min, alpha_max, alpha_step);
        const auto curve = spa::edge_length_survival(graph, alphas);
        with_output(analyze_out, [&](std::ostream& os) { spa::write_edges_csv(curve, os); });
      } else if (*degrees) {
        const spa::Theory theory(graph.params());
        const auto histogram = spa::degree_histogram(graph);
        with_output(analyze_out,
                    [&](std::ostream& os) { spa::write_degrees_csv(histogram, theory, os); });
      }
    } else if (*theory_cmd) {
      const spa::Theory theory(theory_flags.params());
      print_theory(theory, print, opt_k, opt_l, opt_d);
    } else if (*verify) {
      const auto params = verify_flags.params();
      spa::GenerateOptions options;
      options.snapshot_times = spa::geometric_snapshot_times(params.n);
      const auto naive = spa::generate_naive(params, options);
      options.engine = spa::Engine::Grid;
      const auto grid = spa::generate(params, options);
      if (!(naive == grid)) {
        std::cerr << "MISMATCH: naive edges=" << naive.edge_count()
                  << " grid edges=" << grid.edge_count() << '\n';
        return kExitVerify;
      }
      std::cout << "ok: n=" << params.n << " seed=" << params.seed
                << " edges=" << grid.edge_count() << " (naive == grid)\n";
    }
  } catch (const spa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const spa::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
