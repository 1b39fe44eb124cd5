#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace orconv {

using Vertex = int;

inline constexpr int kMaxOrder = 128;

/// A subset of the vertex range 0..n-1 (n <= 128) stored as two 64-bit words.
///
/// Ordering between sets (used for deterministic tie-breaking) compares the
/// sets as 128-bit integers, so the "least" set is the one whose highest
/// differing vertex is absent.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  /// Set whose members are the bits of `low` (vertices 0..63).
  constexpr explicit VertexSet(std::uint64_t low) : lo_(low) {}
  constexpr VertexSet(std::uint64_t low, std::uint64_t high) : lo_(low), hi_(high) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet full(int n) {
    if (n <= 0) return {};
    if (n < 64) return VertexSet((std::uint64_t{1} << n) - 1);
    if (n == 64) return VertexSet(~std::uint64_t{0});
    if (n < 128) return VertexSet(~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1);
    return VertexSet(~std::uint64_t{0}, ~std::uint64_t{0});
  }
  static constexpr VertexSet single(Vertex v) {
    return v < 64 ? VertexSet(std::uint64_t{1} << v) : VertexSet(0, std::uint64_t{1} << (v - 64));
  }
  /// All vertices strictly below `v`.
  static constexpr VertexSet below(Vertex v) { return full(v); }

  constexpr std::uint64_t low_bits() const { return lo_; }
  constexpr std::uint64_t high_bits() const { return hi_; }
  constexpr bool empty() const { return (lo_ | hi_) == 0; }
  constexpr int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool contains(Vertex v) const {
    return v < 64 ? ((lo_ >> v) & 1U) != 0 : ((hi_ >> (v - 64)) & 1U) != 0;
  }
  constexpr void insert(Vertex v) {
    if (v < 64) lo_ |= std::uint64_t{1} << v; else hi_ |= std::uint64_t{1} << (v - 64);
  }
  constexpr void erase(Vertex v) {
    if (v < 64) lo_ &= ~(std::uint64_t{1} << v); else hi_ &= ~(std::uint64_t{1} << (v - 64));
  }
  constexpr bool subset_of(VertexSet o) const { return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const {
    return lo_ != 0 ? std::countr_zero(lo_) : 64 + std::countr_zero(hi_);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = lo_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
    for (std::uint64_t b = hi_; b != 0; b &= b - 1) f(static_cast<Vertex>(64 + std::countr_zero(b)));
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(lo_ | o.lo_, hi_ | o.hi_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(lo_ & o.lo_, hi_ & o.hi_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(lo_ & ~o.lo_, hi_ & ~o.hi_); }
  constexpr VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
  constexpr VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  constexpr VertexSet& operator-=(VertexSet o) { return *this = *this - o; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

}  // namespace orconv
