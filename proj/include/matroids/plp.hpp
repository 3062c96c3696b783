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

#ifndef MATROIDS_PLP_H_
#define MATROIDS_PLP_H_

#include <string>

#include "matroids/matroid.hpp"
#include "matroids/set_family.hpp"

namespace matroids {

// Point-line incidence graph of a rank-3 matroid: V1 = points (labelled
// by ground-set elements), V2 = lines, edges = containment. `points` is
// the V1 vertex set; lines list their point sets.
struct BipartiteIncidence {
  ElementSet points;
  SetFamily lines;
};

// Throws RankMismatch unless rank(m) = 3.
BipartiteIncidence GraphFromRank3(const Matroid& m);

// Property beta: both sides nonempty, every pair of points lies on
// exactly one common line, minimum degree 2. The diagnostic names the
// violated clause with witnesses (all offending point pairs for the
// uniqueness clause).
Diagnostic HasPropertyBeta(const BipartiteIncidence& g);

// Subgraph induced by a set of lines and their points.
BipartiteIncidence Restrict(const BipartiteIncidence& g, const SetFamily& a);

inline constexpr int kDefaultBetaCap = 30;

// Number of proper line subsets A whose restriction has property beta.
long long BetaCount(const BipartiteIncidence& g, int workers = 1,
                    int cap = kDefaultBetaCap);

struct PlpReport {
  long long beta;
  long long bound_num;  // 2 m^2 (n-2) / (3 n (n-1)), reduced
  long long bound_den;
  bool holds;
};

// Checks beta(G) <= 2 m^2 (n-2) / (3 n (n-1)) by exact rational comparison.
// Requires the graph itself to have property beta.
PlpReport PlpBoundCheck(const BipartiteIncidence& g, int workers = 1,
                        int cap = kDefaultBetaCap);

// Deterministic DOT text: points as circles (p<i>), lines as boxes
// (L_<elements>), edges for incidence.
std::string ExportDot(const BipartiteIncidence& g);

}  // namespace matroids

#endif  // MATROIDS_PLP_H_
