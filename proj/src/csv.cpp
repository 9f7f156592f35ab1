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

#include "spa/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "spa/errors.hpp"

namespace spa {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("failed to format real");
  return std::string(buf.data(), end);
}

double parse_real(std::string_view text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

}  // namespace

void write_pairs_csv(std::span<const PairEstimate> pairs, std::ostream& out) {
  out << "id_k,id_l,deg_k,deg_l,cn,d_actual,d_hat,d_hat_adjusted,regime\n";
  for (const PairEstimate& p : pairs) {
    out << p.id_k << ',' << p.id_ell << ',' << p.k << ',' << p.ell << ',' << p.cn << ','
        << format_real(p.d_actual) << ',' << format_real(p.d_hat) << ','
        << format_real(p.d_hat_adjusted) << ',' << to_string(p.regime) << '\n';
  }
}

void write_edges_csv(const EdgeLengthCurve& curve, std::ostream& out) {
  out << "alpha,r_alpha,e_alpha,e_alpha_predicted,log_slope_predicted\n";
  for (const EdgeLengthRow& row : curve.rows) {
    out << format_real(row.alpha) << ',' << format_real(row.r_alpha) << ',' << row.e_alpha << ','
        << opt(row.e_alpha_predicted) << ',' << opt(row.log_slope_predicted) << '\n';
  }
}

void write_degrees_csv(const DegreeHistogram& histogram, const Theory& theory, std::ostream& out) {
  out << "k,N_k,ck_exact,ck_asymptotic\n";
  for (const auto& [k, count] : histogram.counts) {
    out << k << ',' << count << ',' << format_real(theory.ck_exact(k)) << ','
        << (k >= 1 ? format_real(theory.ck_asymptotic(k)) : std::string()) << '\n';
  }
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column named '" + std::string(name) + "'");
}

double CsvTable::real(std::size_t row, std::string_view name) const {
  return parse_real(rows.at(row).at(column(name)));
}

std::optional<double> CsvTable::optional_real(std::size_t row, std::string_view name) const {
  const std::string& cell = rows.at(row).at(column(name));
  if (cell.empty()) return std::nullopt;
  return parse_real(cell);
}

CsvTable read_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return fields;
  };
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(table.header.size()) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty()) throw ParseError(0, "CSV input has no header row");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in);
}

}  // namespace spa
