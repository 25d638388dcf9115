#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"
#include "reslab/independence.hpp"

namespace reslab {

// ---------------------------------------------------------------------------
// Named families, labelled 0..n-1 along the path/cycle.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complement_cycle(int n) { return complement(cycle(n)); }

inline Graph complement_path(int n) {
  if (n < 2) throw PreconditionError("complement_path needs n >= 2");
  return complement(path(n));
}

// ---------------------------------------------------------------------------
// Induced embeddings.

/// map[a] = host vertex playing pattern vertex a.
struct Embedding {
  std::vector<Vertex> map;
  bool operator==(const Embedding&) const = default;
};

/// Pattern vertex -> required host vertex.
using Anchor = std::vector<std::pair<Vertex, Vertex>>;

namespace detail {

struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<VertexSet> allowed;  // per pattern vertex
  std::vector<Vertex> map;

  bool extend(int depth, VertexSet used) {
    const int p = pattern.order();
    if (depth == p) return true;
    VertexSet cand = allowed[static_cast<std::size_t>(depth)] - used;
    for (int prev = 0; prev < depth; ++prev) {
      const Vertex image = map[static_cast<std::size_t>(prev)];
      if (pattern.adjacent(prev, depth)) {
        cand &= host.neighbors(image);
      } else {
        cand -= host.neighbors(image);
      }
      if (cand.empty()) return false;
    }
    for (Vertex h : cand) {
      map[static_cast<std::size_t>(depth)] = h;
      VertexSet next = used;
      next.insert(h);
      if (extend(depth + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace detail

/// Lexicographically least induced embedding of `pattern` into `host` that
/// honours `anchor`, or nothing. Exhaustive backtracking in pattern-vertex
/// order, filtered by degree and by neighborhood bitmasks.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                             const Anchor& anchor = {}) {
  const int p = pattern.order();
  const int n = host.order();
  std::vector<VertexSet> allowed(static_cast<std::size_t>(p));
  std::vector<Vertex> pinned(static_cast<std::size_t>(p), -1);
  VertexSet pinned_images;
  for (auto [a, h] : anchor) {
    pattern.check_vertex(a);
    host.check_vertex(h);
    Vertex& slot = pinned[static_cast<std::size_t>(a)];
    if (slot >= 0 && slot != h) {
      throw PreconditionError("pattern vertex " + std::to_string(a) + " anchored twice");
    }
    if (slot < 0 && pinned_images.contains(h)) {
      throw PreconditionError("host vertex " + std::to_string(h) + " anchored twice");
    }
    slot = h;
    pinned_images.insert(h);
  }
  if (p > n) return std::nullopt;

  for (Vertex a = 0; a < p; ++a) {
    const int deg = pattern.degree(a);
    const int non = p - 1 - deg;
    VertexSet ok;
    for (Vertex h = 0; h < n; ++h) {
      if (host.degree(h) >= deg && n - 1 - host.degree(h) >= non) ok.insert(h);
    }
    const Vertex pin = pinned[static_cast<std::size_t>(a)];
    if (pin >= 0) {
      ok &= VertexSet::single(pin);
    } else {
      ok -= pinned_images;
    }
    if (ok.empty()) return std::nullopt;
    allowed[static_cast<std::size_t>(a)] = ok;
  }

  detail::InducedSearch search{host, pattern, std::move(allowed),
                               std::vector<Vertex>(static_cast<std::size_t>(p))};
  if (!search.extend(0, {})) return std::nullopt;
  return Embedding{std::move(search.map)};
}

inline bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(host, pattern).has_value();
}

/// True iff no pattern with at most host.order() vertices embeds.
inline bool is_family_free(const Graph& g, std::span<const Graph> patterns) {
  for (const Graph& p : patterns) {
    if (p.order() <= g.order() && contains_induced(g, p)) return false;
  }
  return true;
}

/// Some induced P5 has its center at an MDI vertex of g.
inline bool has_p5_star(const Graph& g, VertexSet mdi) {
  if (g.order() < 5) return false;
  static const Graph p5 = path(5);
  for (Vertex c : mdi) {
    if (find_induced(g, p5, {{2, c}})) return true;
  }
  return false;
}

inline bool has_p5_star(const Graph& g) {
  if (g.order() < 5) return false;
  return has_p5_star(g, mdi_vertices(g).mdi_vertices);
}

// ---------------------------------------------------------------------------
// The structure family: an independent triple {u, v, w} over a core that is a
// cycle complement (cases A, B) or a path complement (case C).

enum class FKind { A, B, C };

/// Where the Q' vertices attach: case A has none, case B puts its single q on
/// u's side, case C puts the two path endpoints on one side or on both.
enum class Attachment { none, u_side, same_side, opposite_side };

enum class Role { v, u, w, q, n };

struct FMember {
  FKind kind = FKind::A;
  int core_size = 0;
  Attachment variant = Attachment::none;
  Graph graph;
  std::vector<Role> roles;  // roles[x] for every vertex x
  bool mdi_verified = false;

  static constexpr Vertex kV = 0;
  static constexpr Vertex kU = 1;
  static constexpr Vertex kW = 2;

  VertexSet with_role(Role r) const {
    VertexSet out;
    for (std::size_t x = 0; x < roles.size(); ++x) {
      if (roles[x] == r) out.insert(static_cast<Vertex>(x));
    }
    return out;
  }

  std::string name() const {
    std::string out = kind == FKind::A ? "A" : kind == FKind::B ? "B" : "C";
    out += std::to_string(core_size);
    if (variant == Attachment::same_side) out += "-same";
    if (variant == Attachment::opposite_side) out += "-opposite";
    return out;
  }

  /// "v=0;u=1;w=2;Q'=3;N'=4,5,6"; `map` relabels into a host graph.
  std::string role_string(const std::vector<Vertex>* map = nullptr) const {
    auto id = [&](Vertex x) {
      return std::to_string(map ? (*map)[static_cast<std::size_t>(x)] : x);
    };
    auto list = [&](Role r) {
      std::string s;
      for (Vertex x : with_role(r)) {
        if (!s.empty()) s += ',';
        s += id(x);
      }
      return s;
    };
    return "v=" + id(kV) + ";u=" + id(kU) + ";w=" + id(kW) + ";Q'=" + list(Role::q) +
           ";N'=" + list(Role::n);
  }
};

namespace detail {

inline void check_member(const FMember& m) {
  const Graph& g = m.graph;
  const VertexSet vuw{FMember::kV, FMember::kU, FMember::kW};
  const VertexSet qs = m.with_role(Role::q);
  const VertexSet ns = m.with_role(Role::n);
  const int expected_q = m.kind == FKind::A ? 0 : m.kind == FKind::B ? 1 : 2;
  bool ok = g.is_independent(vuw) && qs.size() == expected_q &&
            qs.size() + ns.size() + 3 == g.order();
  for (Vertex x : qs | ns) ok = ok && g.adjacent(x, FMember::kV);
  for (Vertex x : ns) ok = ok && g.adjacent(x, FMember::kU) && g.adjacent(x, FMember::kW);
  for (Vertex x : qs) ok = ok && (g.adjacent(x, FMember::kU) != g.adjacent(x, FMember::kW));
  if (!ok) throw std::logic_error("structure member " + m.name() + " violates its role layout");
}

}  // namespace detail

/// Vertices: v = 0, u = 1, w = 2, then the core c_0..c_{n-1} as 3..n+2 in
/// cycle/path order. Q' is c_0 (case B) or the path ends c_0, c_{n-1} (case C).
inline FMember gen_f_member(FKind kind, int n, Attachment variant = Attachment::none) {
  if (n < 3) throw PreconditionError("structure core needs n >= 3");
  if (kind == FKind::B && variant == Attachment::none) variant = Attachment::u_side;
  if (kind == FKind::C && variant == Attachment::none) variant = Attachment::opposite_side;
  const bool valid = (kind == FKind::A && variant == Attachment::none) ||
                     (kind == FKind::B && variant == Attachment::u_side) ||
                     (kind == FKind::C && (variant == Attachment::same_side ||
                                           variant == Attachment::opposite_side));
  if (!valid) throw PreconditionError("attachment variant does not fit the case");
  if (n + 3 > kMaxVertices) throw LimitExceeded("structure member too large");

  FMember m;
  m.kind = kind;
  m.core_size = n;
  m.variant = variant;
  m.graph = Graph(n + 3);
  m.roles.assign(static_cast<std::size_t>(n + 3), Role::n);
  m.roles[FMember::kV] = Role::v;
  m.roles[FMember::kU] = Role::u;
  m.roles[FMember::kW] = Role::w;

  const Graph core = kind == FKind::C ? complement_path(n) : complement_cycle(n);
  auto at = [](int c) { return static_cast<Vertex>(c + 3); };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (core.adjacent(a, b)) m.graph.add_edge(at(a), at(b));
    }
  }

  std::vector<std::pair<int, Vertex>> q_sides;
  if (kind == FKind::B) q_sides = {{0, FMember::kU}};
  if (kind == FKind::C) {
    q_sides = {{0, FMember::kU},
               {n - 1, variant == Attachment::same_side ? FMember::kU : FMember::kW}};
  }
  for (int c = 0; c < n; ++c) {
    const Vertex x = at(c);
    m.graph.add_edge(x, FMember::kV);
    auto side = std::find_if(q_sides.begin(), q_sides.end(),
                             [&](const auto& qs) { return qs.first == c; });
    if (side != q_sides.end()) {
      m.roles[static_cast<std::size_t>(x)] = Role::q;
      m.graph.add_edge(x, side->second);
    } else {
      m.graph.add_edge(x, FMember::kU);
      m.graph.add_edge(x, FMember::kW);
    }
  }
  detail::check_member(m);
  m.mdi_verified = has_mdi(m.graph, FMember::kV);
  return m;
}

/// Every member with at most max_vertices vertices, ordered by case, core
/// size, then variant. With mdi_filter only the MDI-verified members remain.
inline std::vector<FMember> f_catalog(int max_vertices, bool mdi_filter) {
  if (max_vertices < 6) throw PreconditionError("f_catalog needs max_vertices >= 6");
  max_vertices = std::min(max_vertices, kMaxVertices);
  std::vector<FMember> out;
  auto keep = [&](FMember m) {
    if (!mdi_filter || m.mdi_verified) out.push_back(std::move(m));
  };
  for (int n = 3; n + 3 <= max_vertices; ++n) keep(gen_f_member(FKind::A, n));
  for (int n = 3; n + 3 <= max_vertices; ++n) keep(gen_f_member(FKind::B, n));
  for (int n = 3; n + 3 <= max_vertices; ++n) {
    keep(gen_f_member(FKind::C, n, Attachment::same_side));
    keep(gen_f_member(FKind::C, n, Attachment::opposite_side));
  }
  return out;
}

}  // namespace reslab
