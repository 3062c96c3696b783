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

#ifndef MATROIDS_ELEMENT_SET_H_
#define MATROIDS_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroids {

// A subset of the ground set S_n = {1, ..., n}, n <= 64, stored as a
// machine word. Element e occupies bit e-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet Full(int n) {
    return ElementSet(n == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet Single(int e) {
    return ElementSet(std::uint64_t{1} << (e - 1));
  }
  static ElementSet Of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.Insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr int Size() const { return std::popcount(bits_); }
  constexpr bool Contains(int e) const {
    return (bits_ >> (e - 1)) & 1;
  }
  constexpr void Insert(int e) { bits_ |= std::uint64_t{1} << (e - 1); }
  constexpr void Remove(int e) { bits_ &= ~(std::uint64_t{1} << (e - 1)); }

  constexpr bool SubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool StrictSubsetOf(ElementSet other) const {
    return bits_ != other.bits_ && SubsetOf(other);
  }

  int Min() const { return std::countr_zero(bits_) + 1; }  // requires nonempty

  std::vector<int> Elements() const {
    std::vector<int> out;
    out.reserve(Size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) {
    return a.bits_ != b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending element sequences, with a proper
// prefix ordered before its extensions. This is the canonical order used
// everywhere sets are printed or minimized over.
inline bool LexLess(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int ea = std::countr_zero(x), eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// Canonical textual form: ascending elements, space separated. The empty
// set prints as "-".
inline std::string ToString(ElementSet s) {
  if (s.Empty()) return "-";
  std::string out;
  for (int e : s.Elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

// Compact digit form used by the n <= 9 examples, e.g. {2,4,5} -> "245".
inline std::string ToCompactString(ElementSet s) {
  if (s.Empty()) return "-";
  std::string out;
  for (int e : s.Elements()) out += static_cast<char>('0' + e);
  return out;
}

}  // namespace matroids

#endif  // MATROIDS_ELEMENT_SET_H_
