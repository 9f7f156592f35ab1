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

#include "spa/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spa/csv.hpp"
#include "spa/errors.hpp"

namespace spa {

namespace {

constexpr std::string_view kHeader = "spa-graph v1";

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view text, std::size_t line, const char* what) {
  Int value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_field(std::string_view text, std::size_t line, const char* what) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
}

}  // namespace

void write_graph(const SpaGraph& graph, std::ostream& out) {
  const ModelParams& p = graph.params();
  out << kHeader << '\n';
  out << "param " << p.n << ' ' << format_real(p.p) << ' ' << format_real(p.a1) << ' '
      << format_real(p.a2) << ' ' << p.m << ' ' << to_string(p.norm) << ' ' << p.seed << '\n';
  char buf[40];
  for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
    out << "v " << v;
    for (double c : graph.position(v)) {
      std::snprintf(buf, sizeof buf, " %.17g", c);
      out << buf;
    }
    out << '\n';
  }
  for (const Edge& e : graph.edges()) out << "e " << e.source << ' ' << e.target << '\n';
  for (const auto& [t, degrees] : graph.snapshots()) {
    out << "s " << t;
    for (std::uint32_t d : degrees) out << ' ' << d;
    out << '\n';
  }
  if (!out) throw IoError("failed writing graph");
}

void write_graph(const SpaGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph(graph, out);
}

SpaGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next()) throw ParseError(0, "empty graph file");
  if (line != kHeader) throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");

  if (!next()) throw ParseError(line_no, "missing param line");
  auto fields = tokens(line);
  if (fields.size() != 8 || fields[0] != "param") {
    throw ParseError(line_no, "param line must be 'param n p A1 A2 m norm seed'");
  }
  ModelParams params;
  params.n = parse_int<std::uint32_t>(fields[1], line_no, "n");
  params.p = parse_field(fields[2], line_no, "p");
  params.a1 = parse_field(fields[3], line_no, "A1");
  params.a2 = parse_field(fields[4], line_no, "A2");
  params.m = parse_int<int>(fields[5], line_no, "m");
  try {
    params.norm = parse_norm(fields[6]);
    validate(params);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  params.seed = parse_int<std::uint64_t>(fields[7], line_no, "seed");

  const auto m = static_cast<std::size_t>(params.m);
  std::vector<double> positions;
  positions.reserve(params.n * m);
  std::vector<Edge> edges;
  SnapshotMap snapshots;
  VertexId next_vertex = 1;

  while (next()) {
    if (line.empty()) continue;
    fields = tokens(line);
    if (fields.empty()) continue;
    const std::string_view kind = fields[0];
    if (kind == "v") {
      if (!edges.empty() || !snapshots.empty()) throw ParseError(line_no, "vertex line after edges");
      if (fields.size() != 2 + m) {
        throw ParseError(line_no, "vertex line needs an id and " + std::to_string(m) + " coordinates");
      }
      const auto id = parse_int<VertexId>(fields[1], line_no, "vertex id");
      if (id != next_vertex) {
        throw ParseError(line_no, "expected vertex " + std::to_string(next_vertex) + ", found " +
                                      std::to_string(id));
      }
      if (id > params.n) throw ParseError(line_no, "more vertices than n");
      for (std::size_t i = 0; i < m; ++i) {
        const double c = parse_field(fields[2 + i], line_no, "coordinate");
        if (!(c >= 0.0 && c < 1.0)) throw ParseError(line_no, "coordinate outside [0,1)");
        positions.push_back(c);
      }
      ++next_vertex;
    } else if (kind == "e") {
      if (next_vertex != params.n + 1) {
        throw ParseError(line_no, "edge before all " + std::to_string(params.n) + " vertices");
      }
      if (!snapshots.empty()) throw ParseError(line_no, "edge line after snapshots");
      if (fields.size() != 3) throw ParseError(line_no, "edge line must be 'e src dst'");
      const auto src = parse_int<VertexId>(fields[1], line_no, "edge source");
      const auto dst = parse_int<VertexId>(fields[2], line_no, "edge target");
      if (src < 1 || src > params.n || dst < 1 || dst > params.n) {
        throw ParseError(line_no, "edge endpoint out of range");
      }
      if (src <= dst) throw ParseError(line_no, "edge must point from younger to older (src > dst)");
      edges.push_back({src, dst});
    } else if (kind == "s") {
      if (next_vertex != params.n + 1) throw ParseError(line_no, "snapshot before all vertices");
      if (fields.size() != 2 + params.n) {
        throw ParseError(line_no, "snapshot line needs a time and n degrees");
      }
      const auto t = parse_int<std::uint64_t>(fields[1], line_no, "snapshot time");
      if (t < 1 || t > params.n) throw ParseError(line_no, "snapshot time out of range");
      std::vector<std::uint32_t> degrees(params.n);
      for (std::size_t i = 0; i < params.n; ++i) {
        degrees[i] = parse_int<std::uint32_t>(fields[2 + i], line_no, "degree");
      }
      if (!snapshots.emplace(t, std::move(degrees)).second) {
        throw ParseError(line_no, "duplicate snapshot time");
      }
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(kind) + "'");
    }
  }
  if (next_vertex != params.n + 1) {
    throw ParseError(line_no, "file ends after " + std::to_string(next_vertex - 1) + " of " +
                                  std::to_string(params.n) + " vertices");
  }
  try {
    return SpaGraph(params, std::move(positions), std::move(edges), std::move(snapshots));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

SpaGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace spa
