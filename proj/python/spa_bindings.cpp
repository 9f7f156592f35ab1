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

// Python bindings over the C++ core. Bulk data comes back as NumPy arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "spa/analysis.hpp"
#include "spa/errors.hpp"
#include "spa/generator.hpp"
#include "spa/graph_io.hpp"
#include "spa/theory.hpp"

namespace py = pybind11;

namespace {

template <typename T>
py::array_t<T> to_array(std::span<const T> values) {
  py::array_t<T> out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

py::array_t<double> optional_column(const std::vector<std::optional<double>>& values) {
  py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
  auto* data = out.mutable_data();
  for (std::size_t i = 0; i < values.size(); ++i) data[i] = values[i].value_or(NAN);
  return out;
}

spa::ModelParams make_params(std::uint32_t n, double p, double a1, double a2, int m,
                             const std::string& norm, std::uint64_t seed) {
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

spa::SpaGraph generate(const spa::ModelParams& params, const std::string& engine,
                       const std::vector<std::uint64_t>& snapshots, bool geometric_snapshots) {
  spa::GenerateOptions options;
  options.engine = spa::parse_engine(engine);
  options.snapshot_times = geometric_snapshots ? spa::geometric_snapshot_times(params.n) : snapshots;
  py::gil_scoped_release release;
  return spa::generate(params, options);
}

py::dict distance_pairs(const spa::SpaGraph& graph, std::uint32_t min_cn, double close_ratio,
                        double c_weight, double threshold) {
  const spa::AdjacencyIndex index(graph);
  spa::EstimateOptions options;
  options.c_weight = c_weight;
  options.threshold = threshold;
  const auto pairs =
      spa::estimate_pair_distances(graph, spa::eligible_pairs(graph, index, min_cn, close_ratio), options);
  std::vector<std::uint32_t> id_k, id_l, k, l, cn;
  std::vector<double> d_actual, d_hat, d_adj;
  std::vector<std::string> regime;
  for (const auto& pe : pairs) {
    id_k.push_back(pe.id_k);
    id_l.push_back(pe.id_ell);
    k.push_back(pe.k);
    l.push_back(pe.ell);
    cn.push_back(pe.cn);
    d_actual.push_back(pe.d_actual);
    d_hat.push_back(pe.d_hat);
    d_adj.push_back(pe.d_hat_adjusted);
    regime.emplace_back(spa::to_string(pe.regime));
  }
  py::dict out;
  out["id_k"] = to_array<std::uint32_t>(id_k);
  out["id_l"] = to_array<std::uint32_t>(id_l);
  out["deg_k"] = to_array<std::uint32_t>(k);
  out["deg_l"] = to_array<std::uint32_t>(l);
  out["cn"] = to_array<std::uint32_t>(cn);
  out["d_actual"] = to_array<double>(d_actual);
  out["d_hat"] = to_array<double>(d_hat);
  out["d_hat_adjusted"] = to_array<double>(d_adj);
  out["regime"] = regime;
  return out;
}

py::dict edge_lengths(const spa::SpaGraph& graph, const std::vector<double>& alphas) {
  const auto curve = spa::edge_length_survival(graph, alphas);
  std::vector<double> alpha, r;
  std::vector<std::uint64_t> e;
  std::vector<std::optional<double>> predicted, slope;
  for (const auto& row : curve.rows) {
    alpha.push_back(row.alpha);
    r.push_back(row.r_alpha);
    e.push_back(row.e_alpha);
    predicted.push_back(row.e_alpha_predicted);
    slope.push_back(row.log_slope_predicted);
  }
  py::dict out;
  out["alpha"] = to_array<double>(alpha);
  out["r_alpha"] = to_array<double>(r);
  out["e_alpha"] = to_array<std::uint64_t>(e);
  out["e_alpha_predicted"] = optional_column(predicted);
  out["log_slope_predicted"] = optional_column(slope);
  return out;
}

}  // namespace

PYBIND11_MODULE(spa_graph, m) {
  m.doc() = "Spatial preferred attachment graphs: generation, theory and analysis";

  py::register_exception<spa::ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<spa::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<spa::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<spa::ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<spa::TorusMetric>(m, "TorusMetric")
      .def(py::init([](int dim, const std::string& norm) {
             return spa::TorusMetric(dim, spa::parse_norm(norm));
           }),
           py::arg("dim"), py::arg("norm") = "l2")
      .def_property_readonly("dim", &spa::TorusMetric::dim)
      .def_property_readonly("unit_ball_volume", &spa::TorusMetric::unit_ball_volume)
      .def("distance",
           [](const spa::TorusMetric& self, std::vector<double> a, std::vector<double> b) {
             return self.distance(spa::TorusPoint(std::move(a)), spa::TorusPoint(std::move(b)));
           })
      .def("ball_volume", &spa::TorusMetric::ball_volume)
      .def("radius_for_volume", &spa::TorusMetric::radius_for_volume)
      .def("max_distance", &spa::TorusMetric::max_distance);

  py::class_<spa::ModelParams>(m, "ModelParams")
      .def(py::init(&make_params), py::arg("n") = 100000, py::arg("p") = 0.95, py::arg("a1") = 1.0,
           py::arg("a2") = 1.0, py::arg("m") = 2, py::arg("norm") = "l2", py::arg("seed") = 1)
      .def_readonly("n", &spa::ModelParams::n)
      .def_readonly("p", &spa::ModelParams::p)
      .def_readonly("a1", &spa::ModelParams::a1)
      .def_readonly("a2", &spa::ModelParams::a2)
      .def_readonly("m", &spa::ModelParams::m)
      .def_readonly("seed", &spa::ModelParams::seed)
      .def_property_readonly("norm",
                             [](const spa::ModelParams& p) { return std::string(spa::to_string(p.norm)); })
      .def("__repr__", [](const spa::ModelParams& p) {
        return "ModelParams(n=" + std::to_string(p.n) + ", p=" + std::to_string(p.p) +
               ", a1=" + std::to_string(p.a1) + ", a2=" + std::to_string(p.a2) +
               ", m=" + std::to_string(p.m) + ", norm='" + std::string(spa::to_string(p.norm)) +
               "', seed=" + std::to_string(p.seed) + ")";
      });

  py::class_<spa::SpaGraph>(m, "Graph")
      .def_property_readonly("params", &spa::SpaGraph::params)
      .def_property_readonly("vertex_count", &spa::SpaGraph::vertex_count)
      .def_property_readonly("edge_count", &spa::SpaGraph::edge_count)
      .def("positions",
           [](const spa::SpaGraph& g) {
             auto flat = to_array<double>(g.positions());
             return flat.reshape({static_cast<py::ssize_t>(g.vertex_count()),
                                  static_cast<py::ssize_t>(g.dim())});
           })
      .def("edges",
           [](const spa::SpaGraph& g) {
             py::array_t<std::uint32_t> out({static_cast<py::ssize_t>(g.edge_count()), py::ssize_t{2}});
             auto view = out.mutable_unchecked<2>();
             py::ssize_t i = 0;
             for (const auto& e : g.edges()) {
               view(i, 0) = e.source;
               view(i, 1) = e.target;
               ++i;
             }
             return out;
           },
           "Edge list as (source, target) rows; source is the younger vertex.")
      .def("in_degrees", [](const spa::SpaGraph& g) { return to_array<std::uint32_t>(g.in_degrees()); })
      .def("snapshots",
           [](const spa::SpaGraph& g) {
             py::dict out;
             for (const auto& [t, degrees] : g.snapshots()) {
               out[py::int_(t)] = to_array<std::uint32_t>(degrees);
             }
             return out;
           })
      .def("save", [](const spa::SpaGraph& g, const std::filesystem::path& path) { spa::write_graph(g, path); })
      .def("__eq__", [](const spa::SpaGraph& a, const spa::SpaGraph& b) { return a == b; });

  m.def("load", [](const std::filesystem::path& path) { return spa::read_graph(path); });
  m.def("generate", &generate, py::arg("params"), py::arg("engine") = "grid",
        py::arg("snapshots") = std::vector<std::uint64_t>{}, py::arg("geometric_snapshots") = false);
  m.def("geometric_snapshot_times", &spa::geometric_snapshot_times);

  py::class_<spa::Theory>(m, "Theory")
      .def(py::init<const spa::ModelParams&>())
      .def_property_readonly("pa1", &spa::Theory::pa1)
      .def("default_threshold", &spa::Theory::default_threshold)
      .def("expected_indegree_exact", &spa::Theory::expected_indegree_exact)
      .def("expected_indegree_asymptotic", &spa::Theory::expected_indegree_asymptotic)
      .def("f", &spa::Theory::f)
      .def("f_inv", &spa::Theory::f_inv)
      .def("degree_trajectory", &spa::Theory::degree_trajectory)
      .def("ck_exact", &spa::Theory::ck_exact)
      .def("ck_asymptotic", &spa::Theory::ck_asymptotic)
      .def("powerlaw_constant", &spa::Theory::powerlaw_constant)
      .def("degree_exponent", &spa::Theory::degree_exponent)
      .def("expected_total_edges", &spa::Theory::expected_total_edges)
      .def("t_minus_plus",
           [](const spa::Theory& th, double i_k, double i_ell, double d) {
             const auto g = th.t_minus_plus(i_k, i_ell, d);
             return py::make_tuple(g.t_minus, g.t_plus);
           })
      .def("cn_predicted", &spa::Theory::cn_predicted)
      .def("d_hat_basic", &spa::Theory::d_hat_basic)
      .def("d_hat_adjusted", &spa::Theory::d_hat_adjusted, py::arg("cn"), py::arg("i_k"),
           py::arg("i_ell"), py::arg("c_weight") = 0.005)
      .def("classify_pair",
           [](const spa::Theory& th, double k, double ell, double d, double threshold, double eps) {
             return std::string(spa::to_string(th.classify_pair(k, ell, d, threshold, eps)));
           },
           py::arg("k"), py::arg("ell"), py::arg("d"), py::arg("threshold"), py::arg("epsilon") = 1.0)
      .def("r_alpha", &spa::Theory::r_alpha)
      .def("e_alpha_predicted", &spa::Theory::e_alpha_predicted)
      .def("e_alpha_log_slope", &spa::Theory::e_alpha_log_slope);

  m.def("common_neighbours", [](const spa::SpaGraph& g, spa::VertexId u, spa::VertexId v) {
    return spa::common_neighbours(g, u, v);
  });
  m.def("distance_pairs", &distance_pairs, py::arg("graph"), py::arg("min_cn") = 20,
        py::arg("close_ratio") = 0.5, py::arg("c_weight") = 0.005, py::arg("threshold") = 0.0,
        "Eligible co-cited pairs with their true and estimated distances.");
  m.def("edge_lengths", &edge_lengths, py::arg("graph"), py::arg("alphas"));
  m.def("degree_histogram", [](const spa::SpaGraph& g) { return spa::degree_histogram(g).counts; });
  m.def("powerlaw_exponent",
        [](const spa::SpaGraph& g, std::uint32_t k_min, std::uint32_t k_max) {
          return spa::powerlaw_fit(spa::degree_histogram(g), k_min, k_max).exponent;
        });
  m.def("trajectory_deviations",
        [](const spa::SpaGraph& g, std::uint32_t degree_floor, double min_time, bool include_final) {
          spa::TrajectoryOptions o;
          o.degree_floor = degree_floor;
          o.min_time = min_time;
          o.include_final = include_final;
          return to_array<double>(spa::trajectory_check(g, o).deviations);
        },
        py::arg("graph"), py::arg("degree_floor") = 200, py::arg("min_time") = 0.0,
        py::arg("include_final") = true);
}
