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

#include "matroids/plp.hpp"

#include <bit>
#include <numeric>
#include <thread>
#include <vector>

namespace matroids {

BipartiteIncidence GraphFromRank3(const Matroid& m) {
  if (m.rank() != 3) {
    throw RankMismatch("incidence graph needs a rank-3 matroid, got rank " +
                       std::to_string(m.rank()));
  }
  return {m.GroundSet(), m.Copoints().SortedLex()};
}

Diagnostic HasPropertyBeta(const BipartiteIncidence& g) {
  if (g.lines.Empty()) return {false, "V2 is empty"};
  if (g.points.Empty()) return {false, "V1 is empty"};
  for (ElementSet line : g.lines) {
    if (!line.SubsetOf(g.points)) {
      return {false, "line {" + ToString(line) + "} uses a vertex outside V1"};
    }
  }
  const std::vector<int> points = g.points.Elements();
  std::string bad_pairs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      int common = 0;
      for (ElementSet line : g.lines) {
        if (line.Contains(points[i]) && line.Contains(points[j])) ++common;
      }
      if (common != 1) {
        if (!bad_pairs.empty()) bad_pairs += ' ';
        bad_pairs += "{" + std::to_string(points[i]) + "," +
                     std::to_string(points[j]) + "}";
      }
    }
  }
  if (!bad_pairs.empty()) {
    return {false, "point pairs lacking a unique common line: " + bad_pairs};
  }
  for (int p : points) {
    int degree = 0;
    for (ElementSet line : g.lines) {
      if (line.Contains(p)) ++degree;
    }
    if (degree < 2) {
      return {false, "point " + std::to_string(p) + " has degree " +
                         std::to_string(degree)};
    }
  }
  for (ElementSet line : g.lines) {
    if (line.Size() < 2) {
      return {false, "line {" + ToString(line) + "} has degree " +
                         std::to_string(line.Size())};
    }
  }
  return {true, ""};
}

BipartiteIncidence Restrict(const BipartiteIncidence& g, const SetFamily& a) {
  ElementSet points;
  for (ElementSet line : a) {
    if (!g.lines.Contains(line)) {
      throw DomainError("restriction line {" + ToString(line) +
                        "} is not a line of the graph");
    }
    points = points | line;
  }
  return {points, a.SortedLex()};
}

long long BetaCount(const BipartiteIncidence& g, int workers, int cap) {
  const int m = static_cast<int>(g.lines.Size());
  if (m > cap) {
    throw SubsetCapExceeded("line count " + std::to_string(m) +
                            " exceeds the subset enumeration cap " +
                            std::to_string(cap));
  }
  if (m == 0) return 0;

  std::vector<std::uint64_t> line_points(m);
  std::uint64_t small_lines = 0;
  for (int i = 0; i < m; ++i) {
    line_points[i] = g.lines[i].bits();
    if (g.lines[i].Size() < 2) small_lines |= std::uint64_t{1} << i;
  }
  std::uint64_t lines_with[65] = {};
  for (int i = 0; i < m; ++i) {
    for (int e : g.lines[i].Elements()) {
      lines_with[e] |= std::uint64_t{1} << i;
    }
  }
  struct PointPair {
    std::uint64_t p_bit, q_bit, lines;
  };
  std::vector<PointPair> pairs;
  const std::vector<int> points = g.points.Elements();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      pairs.push_back({std::uint64_t{1} << (points[i] - 1),
                       std::uint64_t{1} << (points[j] - 1),
                       lines_with[points[i]] & lines_with[points[j]]});
    }
  }

  const std::uint64_t total = std::uint64_t{1} << m;
  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
    long long count = 0;
    for (std::uint64_t a = lo; a < hi; ++a) {
      if (a == total - 1 || (a & small_lines) != 0) continue;
      std::uint64_t covered = 0;
      for (std::uint64_t b = a; b != 0; b &= b - 1) {
        covered |= line_points[std::countr_zero(b)];
      }
      if (covered == 0) continue;
      bool ok = true;
      for (std::uint64_t b = covered; ok && b != 0; b &= b - 1) {
        ok = std::popcount(lines_with[std::countr_zero(b) + 1] & a) >= 2;
      }
      for (std::size_t i = 0; ok && i < pairs.size(); ++i) {
        if ((covered & pairs[i].p_bit) && (covered & pairs[i].q_bit)) {
          ok = std::popcount(pairs[i].lines & a) == 1;
        }
      }
      if (ok) ++count;
    }
    return count;
  };

  workers = std::max(1, workers);
  if (workers == 1 || total < 1024) return count_range(0, total);
  std::vector<long long> partial(workers, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
    pool.emplace_back([&, w, lo, hi] { partial[w] = count_range(lo, hi); });
  }
  for (std::thread& t : pool) t.join();
  long long count = 0;
  for (long long p : partial) count += p;
  return count;
}

PlpReport PlpBoundCheck(const BipartiteIncidence& g, int workers, int cap) {
  Diagnostic diag = HasPropertyBeta(g);
  if (!diag.ok) {
    throw PropertyBetaRequired("graph lacks property beta: " + diag.message);
  }
  const long long n = g.points.Size();
  const long long m = static_cast<long long>(g.lines.Size());
  long long num = 2 * m * m * (n - 2);
  long long den = 3 * n * (n - 1);
  const long long gdiv = std::gcd(num, den);
  num /= gdiv;
  den /= gdiv;
  PlpReport report;
  report.beta = BetaCount(g, workers, cap);
  report.bound_num = num;
  report.bound_den = den;
  report.holds = static_cast<__int128>(report.beta) * den <=
                 static_cast<__int128>(num);
  return report;
}

std::string ExportDot(const BipartiteIncidence& g) {
  auto line_name = [](ElementSet line) {
    std::string name = "L";
    for (int e : line.Elements()) name += "_" + std::to_string(e);
    return name;
  };
  const SetFamily lines = g.lines.SortedLex();
  std::string out = "graph incidence {\n";
  out += "  node [shape=circle];\n";
  for (int p : g.points.Elements()) {
    out += "  p" + std::to_string(p) + ";\n";
  }
  out += "  node [shape=box];\n";
  for (ElementSet line : lines) {
    out += "  " + line_name(line) + ";\n";
  }
  for (ElementSet line : lines) {
    for (int p : line.Elements()) {
      out += "  p" + std::to_string(p) + " -- " + line_name(line) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace matroids
