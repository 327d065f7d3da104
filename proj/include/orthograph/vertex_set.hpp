// Copyright 2026 The Orthograph Authors
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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>

namespace orthograph {

/// Maximum number of vertices a Graph may carry (one machine word).
inline constexpr int kMaxVertices = 64;

/// A subset of the vertices 0..63, stored as a single bitmask.
///
/// Value semantics throughout; the default ordering is the canonical one used
/// by every lattice listing: by cardinality first, then by raw bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_strict_subset_of(VertexSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Lowest member, or -1 for the empty set.
  constexpr int first() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr std::strong_ordering operator<=>(const VertexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

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

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

/// Calls `fn(subset)` for every subset of `set`, including the empty set and
/// `set` itself, in increasing bitmask order.
template <typename Fn>
void for_each_subset(VertexSet set, Fn&& fn) {
  const std::uint64_t mask = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(VertexSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace orthograph

template <>
struct std::hash<orthograph::VertexSet> {
  std::size_t operator()(orthograph::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
