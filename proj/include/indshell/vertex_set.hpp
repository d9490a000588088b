#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace indshell {

using Vertex = int;

/// Largest vertex label representable in a VertexSet.
inline constexpr int kMaxVertices = 64;

/// Set of vertex labels in [0, 64), stored as a bitmask.
///
/// Ordering compares the sorted element lists lexicographically, so sorting a
/// container of VertexSets gives the canonical "sorted list of sorted lists"
/// order used for certificates and memo keys.
class VertexSet {
 public:
  class Iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs);

  static VertexSet range(int n);
  static VertexSet from(const std::vector<Vertex>& vs);
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1u); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr Vertex min() const { return std::countr_zero(bits_); }
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;

  // Lexicographic comparison of sorted element lists. Reversing the bits maps
  // "smaller least element" onto "larger integer", except that a proper prefix
  // must sort first, which the reversed integers also give.
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    if (a.bits_ == b.bits_) return false;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const Vertex first = std::countr_zero(diff);
    const std::uint64_t below = (std::uint64_t{1} << first) - 1;
    // a and b agree on every label below `first`. The one containing `first`
    // has the smaller element at that position, unless the other list simply
    // ended there (then the shorter one is a prefix and sorts first).
    if (a.contains(first)) {
      return (b.bits_ & ~below) != 0;
    }
    return (a.bits_ & ~below) == 0;
  }
  friend constexpr bool operator>(VertexSet a, VertexSet b) { return b < a; }
  friend constexpr bool operator<=(VertexSet a, VertexSet b) { return !(b < a); }
  friend constexpr bool operator>=(VertexSet a, VertexSet b) { return !(a < b); }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Sorts and dedups a family of sets into canonical order.
void canonicalize(std::vector<VertexSet>& family);

/// Inclusion-minimal members of a family, canonically ordered.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family);

/// Inclusion-maximal members of a family, canonically ordered.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> family);

}  // namespace indshell
