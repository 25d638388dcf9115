#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"

namespace reslab {

inline constexpr int kAllMisLimit = 32;

namespace detail {

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Min-degree greedy; seeds the branch-and-bound incumbent.
inline int greedy_independent(const Graph& g, VertexSet alive) {
  int size = 0;
  while (!alive.empty()) {
    Vertex pick = alive.front();
    int best = g.degree(pick, alive);
    for (Vertex v : alive) {
      const int d = g.degree(v, alive);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    alive -= closed_neighborhood(g, pick);
    ++size;
  }
  return size;
}

inline void alpha_search(const Graph& g, VertexSet alive, int size, int& best) {
  if (size + alive.size() <= best) return;
  Vertex branch = -1;
  int branch_degree = 0;
  for (Vertex v : alive) {
    const int d = g.degree(v, alive);
    if (d > branch_degree) {
      branch_degree = d;
      branch = v;
    }
  }
  if (branch < 0) {
    best = size + alive.size();
    return;
  }
  alpha_search(g, alive - closed_neighborhood(g, branch), size + 1, best);
  VertexSet without = alive;
  without.erase(branch);
  alpha_search(g, without, size, best);
}

inline void collect_mis(const Graph& g, VertexSet candidates, VertexSet chosen, int target,
                        std::vector<VertexSet>& out) {
  if (chosen.size() == target) {
    out.push_back(chosen);
    return;
  }
  if (chosen.size() + candidates.size() < target) return;
  const Vertex v = candidates.front();
  VertexSet with = chosen;
  with.insert(v);
  collect_mis(g, candidates - closed_neighborhood(g, v), with, target, out);
  VertexSet rest = candidates;
  rest.erase(v);
  collect_mis(g, rest, chosen, target, out);
}

}  // namespace detail

/// Independence number of G[alive]; branch and bound on a maximum-degree
/// vertex (take it or drop it), seeded with a greedy solution.
inline int alpha(const Graph& g, VertexSet alive) {
  int best = detail::greedy_independent(g, alive);
  detail::alpha_search(g, alive, 0, best);
  return best;
}

inline int alpha(const Graph& g) { return alpha(g, g.vertices()); }

struct MISReport {
  int alpha = 0;
  std::vector<VertexSet> all_mis;  // lexicographic order
};

inline MISReport all_mis(const Graph& g, int limit = kAllMisLimit) {
  if (g.order() > limit) throw LimitExceeded("all_mis limited to n <= " + std::to_string(limit));
  MISReport report;
  report.alpha = alpha(g);
  // Include-first over ascending vertices emits sets in lexicographic order.
  detail::collect_mis(g, g.vertices(), {}, report.alpha, report.all_mis);
  return report;
}

struct MDIReport {
  VertexSet mdi_vertices;
};

/// Maximum-degree vertices lying in every maximum independent set.
inline MDIReport mdi_vertices(const Graph& g, const MISReport& mis) {
  if (g.order() == 0) throw PreconditionError("mdi_vertices on the empty graph");
  VertexSet common = g.vertices();
  for (VertexSet s : mis.all_mis) common &= s;
  const int top = g.max_degree();
  MDIReport out;
  for (Vertex v : common) {
    if (g.degree(v) == top) out.mdi_vertices.insert(v);
  }
  return out;
}

inline MDIReport mdi_vertices(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("mdi_vertices on the empty graph");
  return mdi_vertices(g, all_mis(g, kMaxVertices));
}

inline bool has_mdi(const Graph& g, Vertex v) {
  return g.order() > 0 && mdi_vertices(g).mdi_vertices.contains(v);
}

/// An induced subgraph together with where its vertices came from.
struct ReducedGraph {
  Graph graph;
  Vertex center = 0;            // the MDI vertex, relabelled
  std::vector<Vertex> origin;   // origin[i] = input identifier of vertex i

  VertexSet lift(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(origin[static_cast<std::size_t>(v)]);
    return out;
  }
};

namespace detail {

inline ReducedGraph restrict_to(const Graph& g, VertexSet keep, Vertex v) {
  ReducedGraph out{induced(g, keep), 0, keep.members()};
  out.center = static_cast<Vertex>(
      std::find(out.origin.begin(), out.origin.end(), v) - out.origin.begin());
  return out;
}

inline void require_mdi(const Graph& g, Vertex v, const MISReport& mis) {
  g.check_vertex(v);
  if (!mdi_vertices(g, mis).mdi_vertices.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " does not have MDI conditions");
  }
}

}  // namespace detail

/// Delete every vertex that sits in some maximum independent set other than
/// `keep`. The result has `keep` as its only maximum independent set and v
/// keeps its MDI conditions. `keep` must be a maximum independent set.
inline ReducedGraph reduce_to_unique_mis(const Graph& g, Vertex v, VertexSet keep) {
  const MISReport mis = all_mis(g, kMaxVertices);
  detail::require_mdi(g, v, mis);
  if (std::find(mis.all_mis.begin(), mis.all_mis.end(), keep) == mis.all_mis.end()) {
    throw PreconditionError(to_string(keep) + " is not a maximum independent set");
  }
  VertexSet drop;
  for (VertexSet s : mis.all_mis) drop |= s - keep;
  return detail::restrict_to(g, g.vertices() - drop, v);
}

/// As above with the lexicographically least maximum independent set kept.
inline ReducedGraph reduce_to_unique_mis(const Graph& g, Vertex v) {
  const MISReport mis = all_mis(g, kMaxVertices);
  detail::require_mdi(g, v, mis);
  return reduce_to_unique_mis(g, v, mis.all_mis.front());
}

/// Restrict a unique-MIS graph to N(v) ∪ I, then repeatedly drop neighbors of
/// v that see nothing of I∖{v}.
inline ReducedGraph prune_outside(const Graph& g, Vertex v) {
  const MISReport mis = all_mis(g, kMaxVertices);
  detail::require_mdi(g, v, mis);
  if (mis.all_mis.size() != 1) {
    throw PreconditionError("prune_outside needs a unique maximum independent set");
  }
  const VertexSet iset = mis.all_mis.front();
  VertexSet iprime = iset;
  iprime.erase(v);
  VertexSet keep = g.neighbors(v) | iset;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x : g.neighbors(v) & keep) {
      if ((g.neighbors(x) & iprime).empty()) {
        keep.erase(x);
        changed = true;
      }
    }
  }
  return detail::restrict_to(g, keep, v);
}

/// Neighborhood classes for α = 3: I' = {u, w} with u the lower identifier.
struct Alpha3Classes {
  Vertex u = 0;
  Vertex w = 0;
  VertexSet q_u;  // neighbors of v seeing only u in I'
  VertexSet q_w;  // ... only w
  VertexSet q;    // q_u ∪ q_w
  VertexSet n;    // seeing both u and w
};

struct NeighborhoodPartition {
  Vertex center = 0;
  VertexSet iset;
  VertexSet iprime;
  // classes[i] = Q_i, the neighbors of v with exactly i neighbors in I',
  // for i = 0..|I'|. classes[0] is empty on valid input.
  std::vector<VertexSet> classes;
  std::optional<Alpha3Classes> alpha3;
};

inline NeighborhoodPartition partition_neighborhood(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const MISReport mis = all_mis(g, kMaxVertices);
  if (mis.all_mis.size() != 1) {
    throw PreconditionError("partition_neighborhood needs a unique maximum independent set");
  }
  NeighborhoodPartition out;
  out.center = v;
  out.iset = mis.all_mis.front();
  if (!out.iset.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the maximum independent set");
  }
  if (g.vertices() != (g.neighbors(v) | out.iset)) {
    throw PreconditionError("graph has vertices outside N(v) and the independent set");
  }
  out.iprime = out.iset;
  out.iprime.erase(v);
  out.classes.assign(static_cast<std::size_t>(out.iprime.size()) + 1, VertexSet{});
  for (Vertex x : g.neighbors(v)) {
    out.classes[static_cast<std::size_t>((g.neighbors(x) & out.iprime).size())].insert(x);
  }
  if (!out.classes[0].empty()) {
    throw PreconditionError("neighbor of v with no neighbor in I'");
  }
  if (out.iset.size() == 3) {
    Alpha3Classes c;
    c.u = out.iprime.front();
    c.w = out.iprime.back();
    for (Vertex x : out.classes[1]) {
      (g.adjacent(x, c.u) ? c.q_u : c.q_w).insert(x);
    }
    c.q = c.q_u | c.q_w;
    c.n = out.classes[2];
    out.alpha3 = c;
  }
  return out;
}

}  // namespace reslab
