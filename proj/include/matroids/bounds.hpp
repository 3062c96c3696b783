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

#ifndef MATROIDS_BOUNDS_H_
#define MATROIDS_BOUNDS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroids/matroid.hpp"

namespace matroids {

enum class ConcavityVariant { kI, kII, kIII };

ConcavityVariant ParseConcavityVariant(const std::string& name);  // "i".."iii"

struct ConcavityEntry {
  int k;
  long long lhs;      // W_k^2
  long long rhs_num;  // coefficient * W_{k-1} * W_{k+1}, reduced fraction
  long long rhs_den;
  bool holds;
};

struct ConcavityReport {
  ConcavityVariant variant;
  std::vector<ConcavityEntry> per_k;
  bool all_hold;
};

// Exact rational check of the log-concavity inequality at every
// 0 < k < rank. Coefficient: 1 for (i), (k+1)/k for (ii),
// (k+1)(n-k+1)/(k(n-k)) for (iii). Vacuous-true for rank <= 2.
ConcavityReport CheckLogConcavity(const Matroid& m, ConcavityVariant variant);

struct FreeLcReport {
  long long copoints;        // W_{r-1}(M)
  long long colines;         // W_{r-2}(M)
  long long free_copoints;   // W_r(Free(M)), 1 when trivial
  bool holds;                // copoints^2 >= colines * free_copoints
};

// The free-erection inequality equivalent to log-concavity.
FreeLcReport CheckFreeLc(const Matroid& m);

// Lexicographically smallest coline contained in the copoint x.
ElementSet MinColine(const Matroid& m, ElementSet x);

// Per-coline counts a_F = |{copoints X : MinColine(X) = F}|, in coline
// lex order, zero counts included.
std::vector<std::pair<ElementSet, long long>> AColineCounts(const Matroid& m);

// Sum over colines of C(a_F, 2) under the current labeling.
long long BoundSum(const Matroid& m);

enum class BoundMode { kExact, kHeuristic };

struct BoundReport {
  long long value;
  Permutation witness;
  BoundMode mode;
  std::vector<std::pair<ElementSet, long long>> counts;  // for M(witness)
  long long free_copoints;
};

inline constexpr int kDefaultExactCap = 10;

// Minimizes BoundSum over ground-set permutations. Exact mode scans all
// n! permutations (n <= exact_cap) and reports the lexicographically
// least witness; heuristic mode runs `budget` restarts of pairwise-swap
// hill climbing.
BoundReport MinimizeBound(const Matroid& m, BoundMode mode,
                          int budget = 100, int workers = 1,
                          std::uint64_t seed = 0,
                          int exact_cap = kDefaultExactCap);

std::string FormatBoundReport(const BoundReport& report, int n);

}  // namespace matroids

#endif  // MATROIDS_BOUNDS_H_
