#pragma once

// Labeled small-graph enumeration and brute-force canonical forms.
//
// Edge masks use graph6 pair order: bit k stands for the k-th pair of the
// sequence (0,1), (0,2), (1,2), (0,3), ... i.e. pair (i, j), i < j, sits at
// k = j(j-1)/2 + i.

#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"
#include "reslab/graph6.hpp"

namespace reslab {

inline constexpr int kEnumerationCap = 8;
inline constexpr int kCanonicalCap = 8;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }
constexpr int pair_index(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw LimitExceeded("edge mask needs n <= 11");
  std::uint64_t mask = 0;
  int k = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

/// All labeled graphs on n vertices with edge mask in [first, last), in
/// increasing mask order. Ranges over disjoint index windows partition the
/// stream, which is how scans are sharded.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = const Graph*;
    using reference = Graph;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Graph operator*() const { return graph_from_mask(n_, mask_); }
    std::uint64_t mask() const { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
  };

  LabeledGraphs(int n, std::uint64_t first, std::uint64_t last)
      : n_(n), first_(first), last_(last) {}

  static std::uint64_t total(int n) { return std::uint64_t{1} << pair_count(n); }

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const { return last_ - first_; }
  int order() const { return n_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline LabeledGraphs enumerate_labeled(int n, int cap = kEnumerationCap) {
  if (n < 0) throw PreconditionError("negative order");
  if (n > cap || n > kEnumerationCap) {
    throw LimitExceeded("labeled enumeration capped at n = " +
                        std::to_string(std::min(cap, kEnumerationCap)));
  }
  return {n, 0, LabeledGraphs::total(n)};
}

namespace detail {

// Branch and bound over vertex orders. The bit string is laid out with pair 0
// as its most significant bit, so a smaller integer is a lexicographically
// smaller string; the first j+1 placed vertices fix every pair in columns <= j.
struct CanonicalSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best;
  std::vector<Vertex> order;

  void run(int depth, std::uint64_t used, std::uint64_t prefix, int placed_bits) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (Vertex cand = 0; cand < n; ++cand) {
      if ((used >> cand) & 1U) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < depth; ++i) {
        next = (next << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], cand) ? 1U : 0U);
      }
      const int bits_now = placed_bits + depth;
      if (next > (best >> (total_bits - bits_now))) continue;
      order[static_cast<std::size_t>(depth)] = cand;
      run(depth + 1, used | (std::uint64_t{1} << cand), next, bits_now);
    }
  }
};

}  // namespace detail

/// Bit string (pair 0 most significant) of the lexicographically least
/// relabelling of g. Equal values iff isomorphic (for equal orders).
inline std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalCap) throw LimitExceeded("canonical form needs n <= 8");
  const int total = pair_count(n);
  detail::CanonicalSearch search{g, n, total,
                                 total == 0 ? 0 : (std::uint64_t{1} << total) - 1,
                                 std::vector<Vertex>(static_cast<std::size_t>(n))};
  search.run(0, 0, 0, 0);
  return search.best;
}

/// Canonical form as a byte string: the graph6 record of the least relabelling.
inline std::string canonical_form(const Graph& g) {
  const std::uint64_t bits = canonical_mask(g);
  const int n = g.order();
  const int total = pair_count(n);
  Graph relabelled(n);
  int k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((bits >> (total - 1 - k)) & 1U) relabelled.add_edge(i, j);
    }
  }
  return to_graph6(relabelled);
}

}  // namespace reslab
