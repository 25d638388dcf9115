#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"

namespace reslab {

using Vertex = int;

/// One 64-bit adjacency row per vertex; 62 keeps graph6 lengths single-byte.
inline constexpr int kMaxVertices = 62;

/// A subset of 0..n-1 stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
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

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) {
    return from_bits(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
  constexpr VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  constexpr VertexSet& operator-=(VertexSet o) { return *this = *this - o; }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on the ascending member lists.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_;
    std::uint64_t y = b.bits_;
    while (x != 0 && y != 0) {
      int lx = std::countr_zero(x);
      int ly = std::countr_zero(y);
      if (lx != ly) return lx <=> ly;
      x &= x - 1;
      y &= y - 1;
    }
    return (x != 0) <=> (y != 0);
  }

 private:
  std::uint64_t bits_ = 0;
};

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

/// Simple undirected graph on vertices 0..n-1, n <= 62.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw LimitExceeded("graph order " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxVertices));
    }
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  /// Degree of v counting only neighbors inside `within`.
  int degree(Vertex v, VertexSet within) const {
    return std::popcount(rows_[v] & within.bits());
  }
  std::uint64_t row(Vertex v) const { return rows_[v]; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
    return out;
  }

  bool is_independent(VertexSet s) const {
    for (Vertex v : s) {
      if ((rows_[v] & s.bits()) != 0) return false;
    }
    return true;
  }

  bool is_clique(VertexSet s) const {
    for (Vertex v : s) {
      if (((rows_[v] | (std::uint64_t{1} << v)) & s.bits()) != s.bits()) return false;
    }
    return true;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
    }
  }

  bool operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v) {
      if (rows_[v] != other.rows_[v]) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

/// Subgraph induced on `s`, relabelled by ascending original identifier.
inline Graph induced(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw PreconditionError("vertex set " + to_string(s - g.vertices()) +
                            " out of range for order " + std::to_string(g.order()));
  }
  const std::vector<Vertex> keep = s.members();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced(g, rest);
}

}  // namespace reslab
