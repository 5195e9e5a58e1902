#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scx {

/// A subset of {0, ..., 63} stored as a machine word.
///
/// Vertices are dense integers, so every face, missing face, flat and
/// partition class in the library is a VertexSet. Iteration yields the
/// members in ascending order, which is also the canonical orientation of
/// the simplex.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  /// Throws InputError on out-of-range or repeated vertices.
  static VertexSet from_vertices(std::span<const int> vertices);
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  /// Smallest / largest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  /// Number of members strictly smaller than v.
  constexpr int rank_of(int v) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << v) - 1));
  }

  std::vector<int> to_vector() const;
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
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
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending vertex lists ({0,1} < {0,2} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

/// Lexicographic order within equal cardinality, smaller sets first.
bool size_lex_less(VertexSet a, VertexSet b);

/// All k-subsets of `ground`, in lexicographic order.
std::vector<VertexSet> subsets_of_size(VertexSet ground, int k);

/// Removes every member that strictly contains another member, then sorts
/// the survivors by size_lex_less and deduplicates.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9e3779b97f4a7c15ULL);
  }
};

}  // namespace scx
