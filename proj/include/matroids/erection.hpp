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

#ifndef MATROIDS_ERECTION_H_
#define MATROIDS_ERECTION_H_

#include <cstdint>
#include <random>

#include "matroids/matroid.hpp"
#include "matroids/set_family.hpp"

namespace matroids {

// All single-element augmentations A ∪ {a}, a ∉ A, deduplicated.
// Every member of t must be a proper subset of S_n.
SetFamily Expand(const SetFamily& t, int n);

// Strict-filter membership: a strictly contains at least one member of h.
bool InStrictFilter(const SetFamily& h, ElementSet a);

// Fixed point of: while distinct A, B exist whose intersection is not
// contained in any guard member, replace them by A ∪ B. The result is
// independent of the replacement order; the shuffled overload exists so
// tests can exercise that.
SetFamily Refine(const SetFamily& t, const SetFamily& guard);
SetFamily Refine(const SetFamily& t, const SetFamily& guard,
                 std::mt19937_64& shuffle_rng);

// Unions X1 ∪ X2 over unordered pairs of distinct copoints that share at
// least one common coline, deduplicated.
SetFamily PairFamily(const SetFamily& copoints, const SetFamily& colines);

struct ErectionResult {
  Matroid base;
  Matroid erected;
  bool trivial;
  SetFamily new_copoints;  // {S_n} when trivial
};

// The erection with the maximum number of new copoints:
// Refine(Expand(copoints), copoints).
ErectionResult FreeErection(const Matroid& m);

// Same result through the pair construction:
// Refine(PairFamily(copoints, colines), copoints). Requires rank >= 2.
ErectionResult FreeErectionViaPairs(const Matroid& m);

// Erection relative to a clutter of strict-filter members:
// Refine(Expand(copoints) ∪ a, copoints). Throws InvalidClutter if a is
// not an antichain or some member fails strict-filter membership.
ErectionResult ErectWith(const Matroid& m, const SetFamily& a);

// Draws a random clutter (count and member size governed by intensity,
// reproducible from seed) and erects with it. Intensity 0 gives the free
// erection, intensity 1 the trivial one.
ErectionResult RandomErection(const Matroid& m, std::uint64_t seed,
                              double intensity);

// Iterates random erections from the rank-1 configuration until the
// trivial erection occurs and returns the final simple matroid. The
// first step is always the free erection so every intermediate stays
// simple.
Matroid RandomMatroid(int n, std::uint64_t seed, double intensity);

}  // namespace matroids

#endif  // MATROIDS_ERECTION_H_
