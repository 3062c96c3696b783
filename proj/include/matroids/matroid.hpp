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

#ifndef MATROIDS_MATROID_H_
#define MATROIDS_MATROID_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroids/element_set.hpp"
#include "matroids/errors.hpp"
#include "matroids/set_family.hpp"

namespace matroids {

// A bijection of {1, ..., n} in one-line notation: images[i-1] = pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation Identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int Apply(int e) const { return images_[e - 1]; }
  ElementSet Apply(ElementSet s) const;
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& other) const {
    return images_ == other.images_;
  }

 private:
  std::vector<int> images_;
};

struct Diagnostic {
  bool ok = true;
  std::string message;
};

// Hyperplane-axiom check for a candidate copoint family: antichain,
// exchange axiom, full coverage and simplicity (every derived rank-1
// flat is a singleton). On failure the diagnostic names the first
// violated axiom with a witness.
Diagnostic ValidateCopointFamily(int n, const SetFamily& copoints);

inline constexpr long long kDefaultBasisCap = 10'000'000;

// A simple matroid on S_n, held as its flats stratified by rank. Values
// are immutable after construction and safe to share across threads.
class Matroid {
 public:
  // Builds the full flat lattice from a copoint family: lower flats are
  // the closure of the copoints under pairwise intersection, ranked by
  // longest-chain height from the empty set. Throws InvalidCopoints /
  // NotSimple unless validate is disabled by the caller.
  static Matroid FromCopoints(int n, const SetFamily& copoints,
                              bool validate = true);

  // The rank-1 configuration (flats {∅} and {S_n}) that seeds iterated
  // erection. Simple only for n = 1.
  static Matroid Rank1(int n);

  // Direct construction from an already-stratified flat list.
  Matroid(int n, std::vector<SetFamily> flats_by_rank);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(flats_.size()) - 1; }
  ElementSet GroundSet() const { return ElementSet::Full(n_); }

  const SetFamily& FlatsOfRank(int i) const { return flats_[i]; }
  const SetFamily& Copoints() const { return flats_[rank() - 1]; }
  const SetFamily& Colines() const { return flats_[rank() - 2]; }

  bool IsFlat(ElementSet a) const { return rank_of_flat_.count(a.bits()); }

  // Smallest flat containing a (intersection of all flats above a).
  ElementSet Closure(ElementSet a) const;
  int RankOf(ElementSet a) const;

  // True iff a contains the closure of each of its subsets of size <= k.
  bool IsKClosed(ElementSet a, int k) const;

  // The k-truncation: flats of rank <= k plus the ground set.
  Matroid Truncation(int k) const;

  std::vector<long long> Whitney() const;

  // All rank-sized spanning subsets. Guarded by C(n, rank) <= cap.
  SetFamily Bases(long long cap = kDefaultBasisCap) const;

  // Relabels every flat through pi.
  Matroid Permuted(const Permutation& pi) const;

  bool operator==(const Matroid& other) const;
  bool operator!=(const Matroid& other) const { return !(*this == other); }

 private:
  int n_;
  std::vector<SetFamily> flats_;
  std::unordered_map<std::uint64_t, int> rank_of_flat_;
};

// Crapo's three conditions for H to be the copoint family of an erection
// of m: every member spans, every member is (rank-1)-closed, and every
// basis lies in exactly one member.
Diagnostic VerifyErectionCopoints(const Matroid& m, const SetFamily& h,
                                  long long basis_cap = kDefaultBasisCap);

}  // namespace matroids

#endif  // MATROIDS_MATROID_H_
