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

#include "spa/model.hpp"

namespace spa {

// Line-oriented text format:
//
//   spa-graph v1
//   param <n> <p> <A1> <A2> <m> <l2|linf> <seed>
//   v <id> <x1> ... <xm>        ids 1..n in order, 17 significant digits
//   e <src> <dst>               src > dst
//   s <t> <deg_1> ... <deg_n>   optional degree snapshots
//
// Reals are written with enough digits to read back bit-exactly.

void write_graph(const SpaGraph& graph, std::ostream& out);
void write_graph(const SpaGraph& graph, const std::filesystem::path& path);

// Throws ParseError naming the offending line.
SpaGraph read_graph(std::istream& in);
SpaGraph read_graph(const std::filesystem::path& path);

}  // namespace spa
