// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDS_IO_H_
#define MATROIDS_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "matroids/matroid.hpp"
#include "matroids/plp.hpp"
#include "matroids/set_family.hpp"

namespace matroids {

struct ParsedMatroid {
  int n = 0;
  std::optional<int> declared_rank;
  SetFamily copoints;
  std::vector<std::string> warnings;  // e.g. duplicate copoint lines
};

// Matroid text format: a required `n <int>` line, an optional `rank
// <int>` line, then one copoint per non-empty non-# line, given either
// as separated integers or (n <= 9 only) as a compact digit string.
ParsedMatroid ParseMatroidText(const std::string& text);

// Canonical form: `n`, `rank`, then copoints one per line, elements
// ascending and space separated, lines sorted lexicographically.
std::string FormatMatroid(const Matroid& m);

// Graph text format: `points <n>` then one line per matroid-line.
struct ParsedGraph {
  BipartiteIncidence graph;
  std::vector<std::string> warnings;
};
ParsedGraph ParseGraphText(const std::string& text);

// One set from a standalone token list such as a --restrict argument:
// compact digits for n <= 9, or elements joined by '-' for larger n.
ElementSet ParseSetToken(const std::string& token, int n);

std::string ReadFileOrThrow(const std::string& path);

}  // namespace matroids

#endif  // MATROIDS_IO_H_
