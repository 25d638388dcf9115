#pragma once

// The Maxine heuristic: delete a maximum-degree vertex until what is left is
// edgeless. Everything here works on the surviving-vertex subset of the input
// graph, so vertex identifiers are never relabelled.

#include <bit>
#include <climits>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"

namespace reslab {

inline constexpr int kMaxineAllLimit = 32;

enum class TieBreak { lowest, highest, random };

struct TieBreakPolicy {
  TieBreak rule = TieBreak::lowest;
  std::uint64_t seed = 0;
};

struct MaxineOutcome {
  std::vector<Vertex> deletions;
  VertexSet survivors;
  int size = 0;
};

/// Independent-set sizes reachable over every sequence of tie-break choices.
struct MaxineSummary {
  std::vector<int> achievable_sizes;  // ascending
  int min_size = 0;
  int max_size = 0;

  bool contains(int size) const {
    for (int s : achievable_sizes) {
      if (s == size) return true;
    }
    return false;
  }
};

inline VertexSet max_degree_vertices(const Graph& g, VertexSet alive) {
  int best = -1;
  VertexSet out;
  for (Vertex v : alive) {
    const int d = g.degree(v, alive);
    if (d > best) {
      best = d;
      out = VertexSet::single(v);
    } else if (d == best) {
      out.insert(v);
    }
  }
  return out;
}

inline VertexSet max_degree_vertices(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("max_degree_vertices on the empty graph");
  return max_degree_vertices(g, g.vertices());
}

/// Maximum-degree vertices v of G[alive] whose neighbors can play the top
/// deg(v) entries of the remaining degree order: min deg over N(v) is at least
/// max deg over the other non-neighbors. Deleting such a v performs exactly
/// one Havel-Hakimi step on the degree sequence.
inline VertexSet hh_property_vertices(const Graph& g, VertexSet alive) {
  VertexSet out;
  if (alive.empty()) return out;
  for (Vertex v : max_degree_vertices(g, alive)) {
    const VertexSet nbrs = g.neighbors(v) & alive;
    VertexSet others = alive - nbrs;
    others.erase(v);
    int min_in = INT_MAX;
    for (Vertex x : nbrs) min_in = std::min(min_in, g.degree(x, alive));
    int max_out = INT_MIN;
    for (Vertex x : others) max_out = std::max(max_out, g.degree(x, alive));
    if (min_in >= max_out) out.insert(v);
  }
  return out;
}

inline VertexSet hh_property_vertices(const Graph& g) {
  return hh_property_vertices(g, g.vertices());
}

namespace detail {

inline bool has_edge_within(const Graph& g, VertexSet alive) {
  for (Vertex v : alive) {
    if ((g.row(v) & alive.bits()) != 0) return true;
  }
  return false;
}

// Memo over surviving subsets; dense table for small n, hash map otherwise.
class SubsetMemo {
 public:
  explicit SubsetMemo(int n) {
    if (n <= 16) dense_.assign(std::size_t{1} << n, 0);
  }
  std::uint64_t get(VertexSet s) const {
    if (!dense_.empty()) return dense_[s.bits()];
    auto it = sparse_.find(s.bits());
    return it == sparse_.end() ? 0 : it->second;
  }
  void put(VertexSet s, std::uint64_t value) {
    if (!dense_.empty()) {
      dense_[s.bits()] = value;
    } else {
      sparse_[s.bits()] = value;
    }
  }

 private:
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

// Bit s set: size s reachable.
inline std::uint64_t maxine_sizes(const Graph& g, VertexSet alive, SubsetMemo& memo) {
  if (std::uint64_t known = memo.get(alive); known != 0) return known;
  std::uint64_t sizes = 0;
  if (!has_edge_within(g, alive)) {
    sizes = std::uint64_t{1} << alive.size();
  } else {
    for (Vertex v : max_degree_vertices(g, alive)) {
      VertexSet next = alive;
      next.erase(v);
      sizes |= maxine_sizes(g, next, memo);
    }
  }
  memo.put(alive, sizes);
  return sizes;
}

inline constexpr std::uint64_t kStuckBit = std::uint64_t{1} << 63;

// Like maxine_sizes but only HH-property deletions; kStuckBit marks that
// some branch ran out of HH-property vertices before finishing.
inline std::uint64_t maxine_hh_sizes(const Graph& g, VertexSet alive, SubsetMemo& memo) {
  if (std::uint64_t known = memo.get(alive); known != 0) return known;
  std::uint64_t sizes = 0;
  if (!has_edge_within(g, alive)) {
    sizes = std::uint64_t{1} << alive.size();
  } else {
    const VertexSet choices = hh_property_vertices(g, alive);
    if (choices.empty()) sizes |= kStuckBit;
    for (Vertex v : choices) {
      VertexSet next = alive;
      next.erase(v);
      sizes |= maxine_hh_sizes(g, next, memo);
    }
  }
  memo.put(alive, sizes);
  return sizes;
}

inline MaxineSummary summarize(std::uint64_t sizes) {
  MaxineSummary out;
  for (std::uint64_t rest = sizes & ~kStuckBit; rest != 0; rest &= rest - 1) {
    out.achievable_sizes.push_back(std::countr_zero(rest));
  }
  if (!out.achievable_sizes.empty()) {
    out.min_size = out.achievable_sizes.front();
    out.max_size = out.achievable_sizes.back();
  }
  return out;
}

}  // namespace detail

inline MaxineOutcome maxine_run(const Graph& g, TieBreakPolicy policy = {}) {
  MaxineOutcome out;
  VertexSet alive = g.vertices();
  std::mt19937_64 rng(policy.seed);
  while (detail::has_edge_within(g, alive)) {
    const std::vector<Vertex> tied = max_degree_vertices(g, alive).members();
    Vertex pick = tied.front();
    if (policy.rule == TieBreak::highest) {
      pick = tied.back();
    } else if (policy.rule == TieBreak::random) {
      std::uniform_int_distribution<std::size_t> dist(0, tied.size() - 1);
      pick = tied[dist(rng)];
    }
    out.deletions.push_back(pick);
    alive.erase(pick);
  }
  out.survivors = alive;
  out.size = alive.size();
  return out;
}

inline MaxineSummary maxine_all(const Graph& g, int limit = kMaxineAllLimit) {
  if (g.order() > limit) {
    throw LimitExceeded("maxine_all limited to n <= " + std::to_string(limit));
  }
  detail::SubsetMemo memo(g.order());
  return detail::summarize(detail::maxine_sizes(g, g.vertices(), memo));
}

/// Maxine run that always deletes the lowest-identifier HH-property vertex.
inline MaxineOutcome maxine_hh(const Graph& g) {
  MaxineOutcome out;
  VertexSet alive = g.vertices();
  while (detail::has_edge_within(g, alive)) {
    const VertexSet choices = hh_property_vertices(g, alive);
    if (choices.empty()) throw NoHHVertex(static_cast<int>(out.deletions.size()));
    out.deletions.push_back(choices.front());
    alive.erase(choices.front());
  }
  out.survivors = alive;
  out.size = alive.size();
  return out;
}

/// Every HH-guided run, over all HH-property choices at every step.
struct MaxineHHExploration {
  MaxineSummary completed;  // sizes of runs that reached an edgeless graph
  bool any_completed = false;
  bool some_branch_stuck = false;
};

inline MaxineHHExploration maxine_hh_all(const Graph& g, int limit = kMaxineAllLimit) {
  if (g.order() > limit) {
    throw LimitExceeded("maxine_hh_all limited to n <= " + std::to_string(limit));
  }
  detail::SubsetMemo memo(g.order());
  const std::uint64_t sizes = detail::maxine_hh_sizes(g, g.vertices(), memo);
  MaxineHHExploration out;
  out.completed = detail::summarize(sizes);
  out.any_completed = !out.completed.achievable_sizes.empty();
  out.some_branch_stuck = (sizes & detail::kStuckBit) != 0;
  return out;
}

}  // namespace reslab
