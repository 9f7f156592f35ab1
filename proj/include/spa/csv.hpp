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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spa/analysis.hpp"
#include "spa/theory.hpp"

namespace spa {

// Shortest decimal that parses back to exactly `value`.
std::string format_real(double value);
double parse_real(std::string_view text);

// Column layouts. Absent optional values are written as empty fields.
//   pairs:   id_k,id_l,deg_k,deg_l,cn,d_actual,d_hat,d_hat_adjusted,regime
//   edges:   alpha,r_alpha,e_alpha,e_alpha_predicted,log_slope_predicted
//            (plot log e_alpha against alpha for the long-edge regimes)
//   degrees: k,N_k,ck_exact,ck_asymptotic  (log-log axes)
void write_pairs_csv(std::span<const PairEstimate> pairs, std::ostream& out);
void write_edges_csv(const EdgeLengthCurve& curve, std::ostream& out);
void write_degrees_csv(const DegreeHistogram& histogram, const Theory& theory, std::ostream& out);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
  double real(std::size_t row, std::string_view name) const;
  std::optional<double> optional_real(std::size_t row, std::string_view name) const;
};

// Plain comma-separated reader: one header row, no quoting.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace spa
