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
//
// The six example matroids from the literature that the golden tests
// are pinned to, plus small builders shared across test files.

#ifndef MATROIDS_TESTS_EXAMPLE_DATA_H_
#define MATROIDS_TESTS_EXAMPLE_DATA_H_

#include <string>
#include <vector>

#include "matroids/erection.hpp"
#include "matroids/io.hpp"
#include "matroids/matroid.hpp"

namespace matroids::testdata {

// Brylawski's rank-4 pair on S_8: M2 replaces four planes of M1 by
// their union, which grows the free erection from trivial to 20 copoints.
inline const char* kM1 =
    "n 8\n"
    "123\n124\n1256\n127\n128\n134\n1357\n136\n138\n1458\n146\n147\n"
    "167\n168\n178\n234\n235\n2367\n238\n245\n246\n247\n248\n257\n258\n"
    "268\n278\n345\n346\n3478\n356\n358\n368\n456\n457\n467\n468\n567\n"
    "568\n578\n678\n";

inline const char* kM2 =
    "n 8\n"
    "123\n124\n1256\n127\n128\n134\n1357\n136\n138\n1458\n146\n147\n"
    "167\n168\n178\n234\n235\n2367\n238\n245\n247\n257\n258\n"
    "278\n345\n346\n3478\n356\n358\n368\n456\n457\n467\n567\n"
    "568\n578\n678\n2468\n";

// Rank-3 on S_8; the printed list repeats "16".
inline const char* kM4 =
    "n 8\n"
    "12\n13\n14\n15\n16\n16\n17\n18\n2345678\n";

inline const char* kM5 =
    "n 8\n"
    "123\n14\n15\n16\n17\n18\n24\n258\n26\n27\n34\n35\n"
    "368\n37\n45\n46\n478\n56\n57\n67\n";

inline const char* kM6 =
    "n 9\n"
    "123\n14\n156\n17\n18\n19\n24\n25\n26\n279\n"
    "28\n34\n35\n36\n37\n38\n39\n45\n46\n47\n48\n49\n"
    "57\n58\n59\n678\n69\n89\n";

inline const std::vector<std::string> kFreeM2Copoints = {
    "123567", "1234",   "1238", "1278", "124568", "1247", "134578",
    "1346",   "1368",   "1467", "1678", "2345",   "234678",
    "2358",   "2457",   "2578", "3456", "3568",   "4567", "5678"};

inline const std::vector<std::string> kFreeM5Copoints = {
    "1234", "123568", "1237", "145", "146", "1478", "157", "167",
    "24578", "246", "267", "345", "34678", "357", "456", "567"};

inline Matroid Build(const char* text) {
  ParsedMatroid parsed = ParseMatroidText(text);
  return Matroid::FromCopoints(parsed.n, parsed.copoints);
}

inline SetFamily CompactFamily(const std::vector<std::string>& sets) {
  SetFamily out;
  for (const std::string& s : sets) {
    ElementSet e;
    for (char c : s) e.Insert(c - '0');
    out.Insert(e);
  }
  return out;
}

// N_r: the r-truncation of the boolean algebra on S_n, i.e. copoints are
// all (r-1)-subsets. N_4 on S_8 doubles as the bundled M3.
inline Matroid TruncatedBoolean(int n, int r) {
  SetFamily copoints;
  const std::uint64_t full = ElementSet::Full(n).bits();
  for (std::uint64_t bits = 0; bits <= full; ++bits) {
    if (std::popcount(bits) == r - 1) copoints.Insert(ElementSet(bits));
  }
  return Matroid::FromCopoints(n, copoints);
}

inline std::vector<Matroid> ExampleCorpus() {
  return {Build(kM1), Build(kM2), TruncatedBoolean(8, 4),
          Build(kM4), Build(kM5), Build(kM6)};
}

}  // namespace matroids::testdata

#endif  // MATROIDS_TESTS_EXAMPLE_DATA_H_
