// Copyright 2026 The matroidkit Authors.
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

#ifndef MATROIDKIT_ELEMENT_SET_HPP_
#define MATROIDKIT_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace matroidkit {

/// Largest element label an ElementSet can hold.
inline constexpr int kMaxLabel = 63;

/// A set of element labels in [0, 63], stored as one machine word.
///
/// Every matroid, matrix and separation in the library speaks in terms of
/// labels, so that a set computed against M can be handed to M*, a minor of
/// M, or a matrix representing M without translation.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> labels);
  explicit ElementSet(const std::vector<int>& labels);

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static ElementSet single(int label);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const {
    return label >= 0 && label <= kMaxLabel && ((bits_ >> label) & 1U) != 0;
  }
  constexpr bool contains(ElementSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool meets(ElementSet other) const {
    return (other.bits_ & bits_) != 0;
  }
  /// Smallest label; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  ElementSet& insert(int label);
  ElementSet& erase(int label);
  ElementSet with(int label) const { return ElementSet(*this).insert(label); }
  ElementSet without(int label) const { return ElementSet(*this).erase(label); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{1,2,5}"
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ ^ b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  /// Orders by the raw word; use lex_less for label-lexicographic order.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted label lists of a and b.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  // The smallest differing label decides, unless one list is a prefix of the
  // other, in which case the shorter list is smaller.
  const std::uint64_t below = low - 1;
  const bool a_has = (a.bits() & low) != 0;
  const bool a_has_more = (a.bits() & ~below & ~low) != 0;
  const bool b_has_more = (b.bits() & ~below & ~low) != 0;
  if (a_has) {
    // b lacks `low`: b is a prefix of a exactly when b has nothing above it.
    return b_has_more;
  }
  return !a_has_more;
}

/// Size first, then lexicographic.
constexpr bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace matroidkit

#endif  // MATROIDKIT_ELEMENT_SET_HPP_
