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

#include "matroids/erection.hpp"

#include <algorithm>
#include <vector>

namespace matroids {
namespace {

double UnitReal(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SetFamily RefineWork(std::vector<ElementSet> work, const SetFamily& guard) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size();) {
        if (guard.SomeMemberContains(work[i] & work[j])) {
          ++j;
          continue;
        }
        const ElementSet u = work[i] | work[j];
        work.erase(work.begin() + j);
        work[i] = u;
        merged = true;
        // The union may now coincide with another entry.
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (k != i && work[k] == u) {
            work.erase(work.begin() + k);
            if (k < i) --i;
            break;
          }
        }
        j = i + 1;  // the grown set can absorb earlier-skipped partners
      }
    }
  }
  SetFamily out;
  for (ElementSet s : work) out.Insert(s);
  return out;
}

ErectionResult MakeResult(const Matroid& m, SetFamily new_copoints) {
  new_copoints.SortLex();
  const bool trivial =
      new_copoints.Size() == 1 && new_copoints[0] == m.GroundSet();
  if (trivial) {
    return {m, m, true, new_copoints};
  }
  std::vector<SetFamily> strata;
  strata.reserve(m.rank() + 2);
  for (int i = 0; i < m.rank(); ++i) strata.push_back(m.FlatsOfRank(i));
  strata.push_back(new_copoints);
  strata.push_back(SetFamily{m.GroundSet()});
  return {m, Matroid(m.n(), std::move(strata)), false, new_copoints};
}

}  // namespace

SetFamily Expand(const SetFamily& t, int n) {
  const ElementSet ground = ElementSet::Full(n);
  SetFamily out;
  for (ElementSet a : t) {
    if (!a.StrictSubsetOf(ground)) {
      throw DomainError("Expand requires proper subsets of S_" +
                        std::to_string(n));
    }
    for (int e : (ground - a).Elements()) {
      ElementSet grown = a;
      grown.Insert(e);
      out.Insert(grown);
    }
  }
  return out;
}

bool InStrictFilter(const SetFamily& h, ElementSet a) {
  return h.SomeMemberStrictlyBelow(a);
}

SetFamily Refine(const SetFamily& t, const SetFamily& guard) {
  return RefineWork(std::vector<ElementSet>(t.begin(), t.end()), guard);
}

SetFamily Refine(const SetFamily& t, const SetFamily& guard,
                 std::mt19937_64& shuffle_rng) {
  std::vector<ElementSet> work(t.begin(), t.end());
  std::shuffle(work.begin(), work.end(), shuffle_rng);
  return RefineWork(std::move(work), guard);
}

SetFamily PairFamily(const SetFamily& copoints, const SetFamily& colines) {
  SetFamily out;
  for (std::size_t i = 0; i < copoints.Size(); ++i) {
    for (std::size_t j = i + 1; j < copoints.Size(); ++j) {
      for (ElementSet c : colines) {
        if (c.SubsetOf(copoints[i]) && c.SubsetOf(copoints[j])) {
          out.Insert(copoints[i] | copoints[j]);
          break;
        }
      }
    }
  }
  return out;
}

ErectionResult FreeErection(const Matroid& m) {
  const SetFamily& copoints = m.Copoints();
  return MakeResult(m, Refine(Expand(copoints, m.n()), copoints));
}

ErectionResult FreeErectionViaPairs(const Matroid& m) {
  if (m.rank() < 2) {
    throw RankOutOfRange("pair construction needs rank >= 2");
  }
  return MakeResult(m, Refine(PairFamily(m.Copoints(), m.Colines()),
                              m.Copoints()));
}

ErectionResult ErectWith(const Matroid& m, const SetFamily& a) {
  if (!a.IsAntichain()) {
    throw InvalidClutter("clutter is not an antichain");
  }
  for (ElementSet s : a) {
    if (!s.SubsetOf(m.GroundSet())) {
      throw InvalidClutter("clutter member {" + ToString(s) +
                           "} is not a subset of the ground set");
    }
    if (!InStrictFilter(m.Copoints(), s)) {
      throw InvalidClutter("clutter member {" + ToString(s) +
                           "} does not strictly contain a copoint");
    }
  }
  SetFamily work = Expand(m.Copoints(), m.n());
  for (ElementSet s : a) work.Insert(s);
  return MakeResult(m, Refine(work, m.Copoints()));
}

ErectionResult RandomErection(const Matroid& m, std::uint64_t seed,
                              double intensity) {
  std::mt19937_64 rng(seed);
  SetFamily clutter;
  if (intensity >= 1.0) {
    clutter.Insert(m.GroundSet());
  } else if (intensity > 0.0) {
    int count = 0;
    while (UnitReal(rng) < intensity && count < 64) ++count;
    std::vector<ElementSet> candidates;
    for (int c = 0; c < count; ++c) {
      const SetFamily& copoints = m.Copoints();
      ElementSet cand = copoints[rng() % copoints.Size()];
      const std::vector<int> missing = (m.GroundSet() - cand).Elements();
      cand.Insert(missing[rng() % missing.size()]);  // strict containment
      for (int e : missing) {
        if (!cand.Contains(e) && UnitReal(rng) < intensity) cand.Insert(e);
      }
      candidates.push_back(cand);
    }
    // Keep the minimal candidates so the clutter is an antichain.
    std::sort(candidates.begin(), candidates.end(),
              [](ElementSet a, ElementSet b) {
                return a.Size() != b.Size() ? a.Size() < b.Size()
                                            : a.bits() < b.bits();
              });
    for (ElementSet cand : candidates) {
      bool dominated = false;
      for (ElementSet kept : clutter) {
        if (kept.SubsetOf(cand)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) clutter.Insert(cand);
    }
  }
  return ErectWith(m, clutter);
}

Matroid RandomMatroid(int n, std::uint64_t seed, double intensity) {
  if (n < 1 || n > 64) {
    throw DomainError("ground-set size must be in 1..64");
  }
  Matroid m = Matroid::Rank1(n);
  std::mt19937_64 seeder(seed);
  // A random clutter at the rank-1 stage would glue elements into
  // parallel classes; the free first step keeps every intermediate
  // matroid simple.
  ErectionResult first = FreeErection(m);
  if (first.trivial) return m;  // n == 1
  m = first.erected;
  while (true) {
    ErectionResult next = RandomErection(m, seeder(), intensity);
    if (next.trivial) return m;
    m = next.erected;
  }
}

}  // namespace matroids
