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

#include "matroids/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace matroids {
namespace {

// Lexicographic combination walk over `elems`, calling fn with each
// size-k subset. Returns false if fn ever returns false.
template <typename Fn>
bool ForEachSubsetOfSize(const std::vector<int>& elems, int k, Fn fn) {
  const int n = static_cast<int>(elems.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ElementSet s;
    for (int i : idx) s.Insert(elems[i]);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

long long Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw DomainError("permutation is not a bijection of 1.." +
                        std::to_string(n));
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

ElementSet Permutation::Apply(ElementSet s) const {
  ElementSet out;
  for (int e : s.Elements()) out.Insert(images_[e - 1]);
  return out;
}

Diagnostic ValidateCopointFamily(int n, const SetFamily& copoints) {
  const ElementSet ground = ElementSet::Full(n);
  if (copoints.Empty()) return {false, "copoint family is empty"};
  for (ElementSet h : copoints) {
    if (!h.SubsetOf(ground)) {
      return {false, "member {" + ToString(h) + "} is not a subset of S_" +
                         std::to_string(n)};
    }
  }
  if (copoints.Contains(ground)) {
    return {false, "the ground set itself is a member"};
  }
  // (a) antichain
  for (std::size_t i = 0; i < copoints.Size(); ++i) {
    for (std::size_t j = 0; j < copoints.Size(); ++j) {
      if (i != j && copoints[i].StrictSubsetOf(copoints[j])) {
        return {false, "not an antichain: {" + ToString(copoints[i]) +
                           "} is contained in {" + ToString(copoints[j]) + "}"};
      }
    }
  }
  // (b) exchange: for distinct H1, H2 and e outside both, some member
  // contains (H1 ∩ H2) ∪ {e}.
  for (std::size_t i = 0; i < copoints.Size(); ++i) {
    for (std::size_t j = i + 1; j < copoints.Size(); ++j) {
      const ElementSet inter = copoints[i] & copoints[j];
      const ElementSet outside = ground - (copoints[i] | copoints[j]);
      for (int e : outside.Elements()) {
        ElementSet probe = inter;
        probe.Insert(e);
        if (!copoints.SomeMemberContains(probe)) {
          return {false, "exchange axiom fails for {" + ToString(copoints[i]) +
                             "}, {" + ToString(copoints[j]) + "} and element " +
                             std::to_string(e)};
        }
      }
    }
  }
  // (c) coverage and simplicity: every element is covered and the
  // intersection of the members through e is {e}.
  for (int e = 1; e <= n; ++e) {
    ElementSet inter = ground;
    bool covered = false;
    for (ElementSet h : copoints) {
      if (h.Contains(e)) {
        covered = true;
        inter = inter & h;
      }
    }
    if (!covered) {
      return {false, "element " + std::to_string(e) + " lies in no member"};
    }
    if (inter != ElementSet::Single(e)) {
      return {false, "not simple: closure of {" + std::to_string(e) +
                         "} is {" + ToString(inter) + "}"};
    }
  }
  return {true, ""};
}

Matroid::Matroid(int n, std::vector<SetFamily> flats_by_rank)
    : n_(n), flats_(std::move(flats_by_rank)) {
  for (int i = 0; i < static_cast<int>(flats_.size()); ++i) {
    flats_[i].SortLex();
    for (ElementSet f : flats_[i]) rank_of_flat_.emplace(f.bits(), i);
  }
}

Matroid Matroid::Rank1(int n) {
  return Matroid(n, {SetFamily{ElementSet()}, SetFamily{ElementSet::Full(n)}});
}

Matroid Matroid::FromCopoints(int n, const SetFamily& copoints,
                              bool validate) {
  if (n < 1 || n > 64) {
    throw DomainError("ground-set size must be in 1..64");
  }
  if (validate) {
    Diagnostic diag = ValidateCopointFamily(n, copoints);
    if (!diag.ok) {
      if (diag.message.rfind("not simple", 0) == 0) {
        throw NotSimple(diag.message);
      }
      throw InvalidCopoints(diag.message);
    }
  }
  if (copoints.Empty()) throw InvalidCopoints("copoint family is empty");

  // Close under pairwise intersection. Every proper flat below a copoint
  // is an intersection of copoints, so intersecting against the copoints
  // until fixpoint generates them all.
  std::vector<ElementSet> flats;
  std::unordered_set<std::uint64_t> seen;
  for (ElementSet h : copoints) {
    if (seen.insert(h.bits()).second) flats.push_back(h);
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (ElementSet h : copoints) {
      const ElementSet inter = flats[i] & h;
      if (seen.insert(inter.bits()).second) flats.push_back(inter);
    }
  }
  if (!seen.count(0)) {
    throw NotSimple("not simple: the intersection of all copoints is nonempty");
  }
  const ElementSet ground = ElementSet::Full(n);
  if (seen.insert(ground.bits()).second) flats.push_back(ground);

  // Rank = longest-chain height from the empty set.
  std::sort(flats.begin(), flats.end(), [](ElementSet a, ElementSet b) {
    return a.Size() != b.Size() ? a.Size() < b.Size() : a.bits() < b.bits();
  });
  std::unordered_map<std::uint64_t, int> height;
  int top = 0;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    int h = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].StrictSubsetOf(flats[i])) {
        h = std::max(h, height[flats[j].bits()] + 1);
      }
    }
    height[flats[i].bits()] = h;
    top = std::max(top, h);
  }

  std::vector<SetFamily> strata(top + 1);
  for (ElementSet f : flats) strata[height[f.bits()]].Insert(f);
  Matroid m(n, std::move(strata));
  if (validate) {
    if (m.rank() < 1 || !m.Copoints().SetEquals(copoints)) {
      throw InvalidCopoints(
          "copoints do not all sit at the top proper rank of the "
          "generated lattice");
    }
    if (static_cast<int>(m.FlatsOfRank(1).Size()) != n) {
      throw NotSimple("not simple: rank-1 flats are not the n singletons");
    }
  }
  return m;
}

ElementSet Matroid::Closure(ElementSet a) const {
  ElementSet acc = GroundSet();
  for (const SetFamily& stratum : flats_) {
    for (ElementSet f : stratum) {
      if (a.SubsetOf(f)) acc = acc & f;
    }
  }
  return acc;
}

int Matroid::RankOf(ElementSet a) const {
  return rank_of_flat_.at(Closure(a).bits());
}

bool Matroid::IsKClosed(ElementSet a, int k) const {
  // By monotonicity of closure it is enough to check the subsets of
  // size min(k, |a|).
  const std::vector<int> elems = a.Elements();
  const int t = std::min<int>(k, static_cast<int>(elems.size()));
  return ForEachSubsetOfSize(elems, t, [&](ElementSet b) {
    return Closure(b).SubsetOf(a);
  });
}

Matroid Matroid::Truncation(int k) const {
  if (k < 1 || k > rank() - 1) {
    throw RankOutOfRange("truncation level " + std::to_string(k) +
                         " outside 1.." + std::to_string(rank() - 1));
  }
  std::vector<SetFamily> strata(flats_.begin(), flats_.begin() + k + 1);
  strata.push_back(SetFamily{GroundSet()});
  return Matroid(n_, std::move(strata));
}

std::vector<long long> Matroid::Whitney() const {
  std::vector<long long> w;
  w.reserve(flats_.size());
  for (const SetFamily& stratum : flats_) {
    w.push_back(static_cast<long long>(stratum.Size()));
  }
  return w;
}

SetFamily Matroid::Bases(long long cap) const {
  const int r = rank();
  if (Binomial(n_, r) > cap) {
    throw EnumerationCapExceeded("C(" + std::to_string(n_) + ", " +
                                 std::to_string(r) + ") exceeds the basis "
                                 "enumeration cap");
  }
  std::vector<int> elems = GroundSet().Elements();
  SetFamily bases;
  ForEachSubsetOfSize(elems, r, [&](ElementSet b) {
    if (RankOf(b) == r) bases.Insert(b);
    return true;
  });
  return bases;
}

Matroid Matroid::Permuted(const Permutation& pi) const {
  if (pi.n() != n_) throw DomainError("permutation size does not match n");
  std::vector<SetFamily> strata;
  strata.reserve(flats_.size());
  for (const SetFamily& stratum : flats_) {
    SetFamily mapped;
    for (ElementSet f : stratum) mapped.Insert(pi.Apply(f));
    strata.push_back(std::move(mapped));
  }
  return Matroid(n_, std::move(strata));
}

bool Matroid::operator==(const Matroid& other) const {
  if (n_ != other.n_ || flats_.size() != other.flats_.size()) return false;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (!flats_[i].SetEquals(other.flats_[i])) return false;
  }
  return true;
}

Diagnostic VerifyErectionCopoints(const Matroid& m, const SetFamily& h,
                                  long long basis_cap) {
  const int r = m.rank();
  for (ElementSet x : h) {
    if (m.RankOf(x) != r) {
      return {false, "member {" + ToString(x) + "} does not span"};
    }
  }
  for (ElementSet x : h) {
    if (!m.IsKClosed(x, r - 1)) {
      return {false, "member {" + ToString(x) + "} is not " +
                         std::to_string(r - 1) + "-closed"};
    }
  }
  for (ElementSet b : m.Bases(basis_cap)) {
    int covers = 0;
    for (ElementSet x : h) {
      if (b.SubsetOf(x)) ++covers;
    }
    if (covers != 1) {
      return {false, "basis {" + ToString(b) + "} is contained in " +
                         std::to_string(covers) + " members"};
    }
  }
  return {true, ""};
}

}  // namespace matroids
