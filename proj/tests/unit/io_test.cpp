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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>

#include "spa/csv.hpp"
#include "spa/errors.hpp"
#include "spa/generator.hpp"
#include "spa/graph_io.hpp"

namespace spa {
namespace {

SpaGraph sample_graph(Norm norm = Norm::L2, int m = 2) {
  ModelParams mp;
  mp.n = 2000;
  mp.p = 0.95;
  mp.a2 = 1.25;
  mp.m = m;
  mp.norm = norm;
  mp.seed = 31;
  GenerateOptions o;
  o.snapshot_times = geometric_snapshot_times(mp.n);
  return generate(mp, o);
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_graph(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(GraphIo, StreamRoundTripIsExact) {
  for (auto [norm, m] : {std::pair{Norm::L2, 2}, std::pair{Norm::Linf, 3}}) {
    const auto g = sample_graph(norm, m);
    std::stringstream buf;
    write_graph(g, buf);
    EXPECT_EQ(read_graph(buf), g);
  }
}

TEST(GraphIo, FileRoundTrip) {
  const auto g = sample_graph();
  const auto path = std::filesystem::temp_directory_path() / "spa_io_test_graph.txt";
  write_graph(g, path);
  EXPECT_EQ(read_graph(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph(path), IoError);
}

TEST(GraphIo, RejectsMalformedFiles) {
  const std::string head = "spa-graph v1\nparam 3 0.5 1 1 1 l2 7\n";
  const std::string verts = "v 1 0.1\nv 2 0.2\nv 3 0.3\n";
  EXPECT_EQ(parse_error_line(""), 0u);
  EXPECT_EQ(parse_error_line("spa-graph v2\n"), 1u);
  EXPECT_EQ(parse_error_line("spa-graph v1\nparam 3 0.5 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("spa-graph v1\nparam 3 1.5 1 1 1 l2 7\n"), 2u);
  EXPECT_EQ(parse_error_line("spa-graph v1\nparam 3 0.5 2 1 1 l2 7\n"), 2u);
  EXPECT_EQ(parse_error_line("spa-graph v1\nparam 3 0.5 1 1 1 l7 7\n"), 2u);
  EXPECT_EQ(parse_error_line(head + "v 1 0.1\nv 3 0.3\n"), 4u);
  EXPECT_EQ(parse_error_line(head + "v 1 0.1 0.2\n"), 3u);
  EXPECT_EQ(parse_error_line(head + "v 1 1.0\n"), 3u);
  EXPECT_EQ(parse_error_line(head + "v 1 x\n"), 3u);
  EXPECT_EQ(parse_error_line(head + "v 1 0.1\ne 2 1\n"), 4u);
  EXPECT_EQ(parse_error_line(head + verts + "e 1 2\n"), 6u);
  EXPECT_EQ(parse_error_line(head + verts + "e 4 2\n"), 6u);
  EXPECT_EQ(parse_error_line(head + verts + "s 2 0 0 0\ne 2 1\n"), 7u);
  EXPECT_EQ(parse_error_line(head + verts + "s 2 0 0\n"), 6u);
  EXPECT_EQ(parse_error_line(head + verts + "s 9 0 0 0\n"), 6u);
  EXPECT_EQ(parse_error_line(head + verts + "x 1\n"), 6u);
  EXPECT_EQ(parse_error_line(head + "v 1 0.1\n"), 3u);
  // Duplicate edges are only detectable once the whole list is known.
  EXPECT_EQ(parse_error_line(head + verts + "e 2 1\ne 2 1\n"), 0u);
  std::istringstream ok(head + verts + "e 2 1\ne 3 1\n\ns 3 2 0 0\n");
  const auto g = read_graph(ok);
  EXPECT_EQ(g.in_degree(1), 2u);
  EXPECT_EQ(g.snapshots().size(), 1u);
}

TEST(Csv, RealsRoundTripExactly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::exp(u(rng)) * (i % 2 ? 1 : -1);
    ASSERT_EQ(parse_real(format_real(x)), x);
  }
  EXPECT_THROW(parse_real(""), std::invalid_argument);
  EXPECT_THROW(parse_real("1.5x"), std::invalid_argument);
}

TEST(Csv, PairsParseBack) {
  const auto g = sample_graph();
  const AdjacencyIndex index(g);
  const auto pairs = estimate_pair_distances(g, eligible_pairs(g, index, 3, 0.5));
  ASSERT_FALSE(pairs.empty());
  std::stringstream buf;
  write_pairs_csv(pairs, buf);
  const auto table = read_csv(buf);
  ASSERT_EQ(table.rows.size(), pairs.size());
  EXPECT_EQ(table.header.size(), 9u);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(table.real(i, "id_k"), pairs[i].id_k);
    EXPECT_EQ(table.real(i, "cn"), pairs[i].cn);
    EXPECT_EQ(table.real(i, "d_actual"), pairs[i].d_actual);
    EXPECT_EQ(table.real(i, "d_hat"), pairs[i].d_hat);
    EXPECT_EQ(table.real(i, "d_hat_adjusted"), pairs[i].d_hat_adjusted);
    EXPECT_EQ(table.rows[i][table.column("regime")], to_string(pairs[i].regime));
  }
}

TEST(Csv, EdgeCurveParsesBackWithAbsentFields) {
  const auto g = sample_graph();
  const auto curve = edge_length_survival(g, alpha_grid(0.0, 1.5, 0.1));
  std::stringstream buf;
  write_edges_csv(curve, buf);
  const auto table = read_csv(buf);
  ASSERT_EQ(table.rows.size(), curve.rows.size());
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    EXPECT_EQ(table.real(i, "r_alpha"), curve.rows[i].r_alpha);
    EXPECT_EQ(table.real(i, "e_alpha"), curve.rows[i].e_alpha);
    EXPECT_EQ(table.optional_real(i, "e_alpha_predicted"), curve.rows[i].e_alpha_predicted);
    EXPECT_EQ(table.optional_real(i, "log_slope_predicted"), curve.rows[i].log_slope_predicted);
  }
}

TEST(Csv, DegreesParseBack) {
  const auto g = sample_graph();
  const Theory th(g.params());
  const auto h = degree_histogram(g);
  std::stringstream buf;
  write_degrees_csv(h, th, buf);
  const auto table = read_csv(buf);
  ASSERT_EQ(table.rows.size(), h.counts.size());
  EXPECT_EQ(table.real(0, "k"), 0.0);
  EXPECT_EQ(table.real(0, "N_k"), double(h.count(0)));
  EXPECT_EQ(table.real(0, "ck_exact"), th.ck_exact(0));
  EXPECT_FALSE(table.optional_real(0, "ck_asymptotic").has_value());
  EXPECT_EQ(table.real(1, "ck_asymptotic"), th.ck_asymptotic(table.real(1, "k")));
}

TEST(Csv, ReaderErrors) {
  std::istringstream empty("");
  EXPECT_THROW(read_csv(empty), ParseError);
  std::istringstream ragged("a,b\n1,2\n3\n");
  try {
    read_csv(ragged);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream ok("a,b\n1,\n");
  const auto t = read_csv(ok);
  EXPECT_THROW(t.column("c"), std::out_of_range);
  EXPECT_FALSE(t.optional_real(0, "b").has_value());
}

}  // namespace
}  // namespace spa
