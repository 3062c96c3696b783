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

#ifndef MATROIDS_SET_FAMILY_H_
#define MATROIDS_SET_FAMILY_H_

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "matroids/element_set.hpp"

namespace matroids {

// A duplicate-free collection of ElementSets. Iteration order is the
// insertion order, so identical construction histories iterate
// identically; SortLex() puts the family into the canonical order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<ElementSet> sets) {
    for (ElementSet s : sets) Insert(s);
  }

  // Returns false (and keeps the family unchanged) on a duplicate.
  bool Insert(ElementSet s) {
    if (!index_.insert(s.bits()).second) return false;
    sets_.push_back(s);
    return true;
  }

  bool Contains(ElementSet s) const { return index_.count(s.bits()) != 0; }

  std::size_t Size() const { return sets_.size(); }
  bool Empty() const { return sets_.empty(); }
  ElementSet operator[](std::size_t i) const { return sets_[i]; }
  std::vector<ElementSet>::const_iterator begin() const {
    return sets_.begin();
  }
  std::vector<ElementSet>::const_iterator end() const { return sets_.end(); }

  void SortLex() {
    std::sort(sets_.begin(), sets_.end(),
              [](ElementSet a, ElementSet b) { return LexLess(a, b); });
  }
  SetFamily SortedLex() const {
    SetFamily out = *this;
    out.SortLex();
    return out;
  }

  // Set equality, ignoring iteration order.
  bool SetEquals(const SetFamily& other) const {
    if (sets_.size() != other.sets_.size()) return false;
    for (ElementSet s : sets_) {
      if (!other.Contains(s)) return false;
    }
    return true;
  }

  bool IsAntichain() const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (i != j && sets_[i].StrictSubsetOf(sets_[j])) return false;
      }
    }
    return true;
  }

  // True iff some member contains a (used as the Refine guard test).
  bool SomeMemberContains(ElementSet a) const {
    for (ElementSet s : sets_) {
      if (a.SubsetOf(s)) return true;
    }
    return false;
  }

  // True iff a strictly contains some member (strict-filter membership).
  bool SomeMemberStrictlyBelow(ElementSet a) const {
    for (ElementSet s : sets_) {
      if (s.StrictSubsetOf(a)) return true;
    }
    return false;
  }

 private:
  std::vector<ElementSet> sets_;
  std::unordered_set<std::uint64_t> index_;
};

}  // namespace matroids

#endif  // MATROIDS_SET_FAMILY_H_
