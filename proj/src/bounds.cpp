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

#include "matroids/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "matroids/erection.hpp"

namespace matroids {
namespace {

long long Choose2(long long a) { return a * (a - 1) / 2; }

// Containment structure that is invariant under relabeling: which
// colines lie below which copoints. Only the coline *order* changes
// with the permutation.
struct BoundContext {
  int n;
  std::vector<std::vector<int>> coline_elems;     // ascending, per coline
  std::vector<std::vector<int>> copoint_colines;  // coline indices

  explicit BoundContext(const Matroid& m) : n(m.n()) {
    const SetFamily& colines = m.Colines();
    for (ElementSet c : colines) coline_elems.push_back(c.Elements());
    for (ElementSet x : m.Copoints()) {
      std::vector<int> below;
      for (std::size_t i = 0; i < colines.Size(); ++i) {
        if (colines[i].SubsetOf(x)) below.push_back(static_cast<int>(i));
      }
      if (below.empty()) {
        throw NoColineContained("copoint {" + ToString(x) +
                                "} contains no coline");
      }
      copoint_colines.push_back(std::move(below));
    }
  }

  // Sum of C(a_F, 2) after relabeling through `images`.
  long long Evaluate(const std::vector<int>& images,
                     std::vector<std::vector<int>>& permuted,
                     std::vector<long long>& counts) const {
    const std::size_t nc = coline_elems.size();
    permuted.resize(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      permuted[i].clear();
      for (int e : coline_elems[i]) permuted[i].push_back(images[e - 1]);
      std::sort(permuted[i].begin(), permuted[i].end());
    }
    counts.assign(nc, 0);
    for (const std::vector<int>& below : copoint_colines) {
      int best = below[0];
      for (std::size_t i = 1; i < below.size(); ++i) {
        if (std::lexicographical_compare(permuted[below[i]].begin(),
                                         permuted[below[i]].end(),
                                         permuted[best].begin(),
                                         permuted[best].end())) {
          best = below[i];
        }
      }
      ++counts[best];
    }
    long long sum = 0;
    for (long long c : counts) sum += Choose2(c);
    return sum;
  }
};

long long FreeCopointCount(const Matroid& m) {
  ErectionResult r = FreeErection(m);
  return r.trivial ? 1 : static_cast<long long>(r.new_copoints.Size());
}

}  // namespace

ConcavityVariant ParseConcavityVariant(const std::string& name) {
  if (name == "i") return ConcavityVariant::kI;
  if (name == "ii") return ConcavityVariant::kII;
  if (name == "iii") return ConcavityVariant::kIII;
  throw DomainError("unknown variant '" + name + "' (expected i, ii or iii)");
}

ConcavityReport CheckLogConcavity(const Matroid& m, ConcavityVariant variant) {
  ConcavityReport report{variant, {}, true};
  if (m.rank() <= 2) return report;  // vacuous
  const std::vector<long long> w = m.Whitney();
  const long long n = m.n();
  for (int k = 1; k < m.rank(); ++k) {
    long long p = 1, q = 1;
    switch (variant) {
      case ConcavityVariant::kI:
        break;
      case ConcavityVariant::kII:
        p = k + 1;
        q = k;
        break;
      case ConcavityVariant::kIII:
        p = static_cast<long long>(k + 1) * (n - k + 1);
        q = static_cast<long long>(k) * (n - k);
        break;
    }
    const long long g = std::gcd(p, q);
    p /= g;
    q /= g;
    ConcavityEntry entry;
    entry.k = k;
    entry.lhs = w[k] * w[k];
    const long long prod = w[k - 1] * w[k + 1];
    const long long g2 = std::gcd(prod, q);
    entry.rhs_num = p * (prod / g2);
    entry.rhs_den = q / g2;
    entry.holds = static_cast<__int128>(entry.lhs) * entry.rhs_den >=
                  static_cast<__int128>(entry.rhs_num);
    report.all_hold = report.all_hold && entry.holds;
    report.per_k.push_back(entry);
  }
  return report;
}

FreeLcReport CheckFreeLc(const Matroid& m) {
  if (m.rank() < 2) throw RankOutOfRange("rank >= 2 required");
  FreeLcReport report;
  report.copoints = static_cast<long long>(m.Copoints().Size());
  report.colines = static_cast<long long>(m.Colines().Size());
  report.free_copoints = FreeCopointCount(m);
  report.holds = static_cast<__int128>(report.copoints) * report.copoints >=
                 static_cast<__int128>(report.colines) * report.free_copoints;
  return report;
}

ElementSet MinColine(const Matroid& m, ElementSet x) {
  bool found = false;
  ElementSet best;
  for (ElementSet c : m.Colines()) {
    if (c.SubsetOf(x) && (!found || LexLess(c, best))) {
      best = c;
      found = true;
    }
  }
  if (!found) {
    throw NoColineContained("copoint {" + ToString(x) +
                            "} contains no coline");
  }
  return best;
}

std::vector<std::pair<ElementSet, long long>> AColineCounts(const Matroid& m) {
  const SetFamily& colines = m.Colines();  // already in lex order
  std::vector<long long> counts(colines.Size(), 0);
  for (ElementSet x : m.Copoints()) {
    const ElementSet f = MinColine(m, x);
    for (std::size_t i = 0; i < colines.Size(); ++i) {
      if (colines[i] == f) {
        ++counts[i];
        break;
      }
    }
  }
  std::vector<std::pair<ElementSet, long long>> out;
  out.reserve(colines.Size());
  for (std::size_t i = 0; i < colines.Size(); ++i) {
    out.emplace_back(colines[i], counts[i]);
  }
  return out;
}

long long BoundSum(const Matroid& m) {
  long long sum = 0;
  for (const auto& [coline, count] : AColineCounts(m)) sum += Choose2(count);
  return sum;
}

BoundReport MinimizeBound(const Matroid& m, BoundMode mode, int budget,
                          int workers, std::uint64_t seed, int exact_cap) {
  if (m.rank() < 2) throw RankOutOfRange("rank >= 2 required");
  const int n = m.n();
  const BoundContext ctx(m);

  long long best_value = -1;
  std::vector<int> best_images;

  if (mode == BoundMode::kExact) {
    if (n > exact_cap) {
      throw ExactCapExceeded("exact minimization capped at n <= " +
                             std::to_string(exact_cap));
    }
    workers = std::max(1, std::min(workers, n));
    std::vector<long long> values(n, -1);
    std::vector<std::vector<int>> witnesses(n);
    // Partition the n! space by the image of element 1; each class is
    // scanned in lex order, so its recorded witness is its lex-least.
    auto scan_class = [&](int first) {
      std::vector<int> images(n);
      images[0] = first;
      int pos = 1;
      for (int v = 1; v <= n; ++v) {
        if (v != first) images[pos++] = v;
      }
      std::vector<std::vector<int>> permuted;
      std::vector<long long> counts;
      long long local_best = -1;
      std::vector<int> local_witness;
      do {
        const long long value = ctx.Evaluate(images, permuted, counts);
        if (local_best < 0 || value < local_best) {
          local_best = value;
          local_witness = images;
        }
      } while (std::next_permutation(images.begin() + 1, images.end()));
      values[first - 1] = local_best;
      witnesses[first - 1] = std::move(local_witness);
    };
    if (workers == 1) {
      for (int first = 1; first <= n; ++first) scan_class(first);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (int first = w + 1; first <= n; first += workers) {
            scan_class(first);
          }
        });
      }
      for (std::thread& t : pool) t.join();
    }
    for (int i = 0; i < n; ++i) {
      if (best_value < 0 || values[i] < best_value) {
        best_value = values[i];
        best_images = witnesses[i];
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> permuted;
    std::vector<long long> counts;
    std::vector<int> images(n);
    for (int restart = 0; restart < std::max(1, budget); ++restart) {
      std::iota(images.begin(), images.end(), 1);
      for (int i = n - 1; i > 0; --i) {
        std::swap(images[i], images[rng() % (i + 1)]);
      }
      long long value = ctx.Evaluate(images, permuted, counts);
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < n && !improved; ++i) {
          for (int j = i + 1; j < n && !improved; ++j) {
            std::swap(images[i], images[j]);
            const long long v = ctx.Evaluate(images, permuted, counts);
            if (v < value) {
              value = v;
              improved = true;
            } else {
              std::swap(images[i], images[j]);
            }
          }
        }
      }
      if (best_value < 0 || value < best_value ||
          (value == best_value && images < best_images)) {
        best_value = value;
        best_images = images;
      }
    }
  }

  Permutation witness(best_images);
  BoundReport report{best_value, witness, mode,
                     AColineCounts(m.Permuted(witness)), FreeCopointCount(m)};
  return report;
}

std::string FormatBoundReport(const BoundReport& report, int n) {
  std::string witness;
  if (n <= 9) {
    for (int v : report.witness.images()) {
      witness += static_cast<char>('0' + v);
    }
  } else {
    for (int v : report.witness.images()) {
      if (!witness.empty()) witness += ' ';
      witness += std::to_string(v);
    }
  }
  std::string out = "value=" + std::to_string(report.value) + " mode=" +
                    (report.mode == BoundMode::kExact ? "exact" : "heuristic") +
                    " witness=" + witness +
                    " free_copoints=" + std::to_string(report.free_copoints) +
                    "\n";
  for (const auto& [coline, count] : report.counts) {
    out += "a[" + (n <= 9 ? ToCompactString(coline) : ToString(coline)) +
           "]=" + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace matroids
