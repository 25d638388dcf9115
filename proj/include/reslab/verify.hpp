#pragma once

// Executable checks over single graphs plus the scan driver that runs them
// across a labeled enumeration or a graph6 corpus.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "reslab/degseq.hpp"
#include "reslab/enumerate.hpp"
#include "reslab/errors.hpp"
#include "reslab/graph.hpp"
#include "reslab/graph6.hpp"
#include "reslab/heuristics.hpp"
#include "reslab/independence.hpp"
#include "reslab/patterns.hpp"
#include "reslab/version.hpp"

namespace reslab {

enum class CheckId {
  thm1_residue_le_alpha,
  thm2_sandwich,
  hh_deletion_gives_residue,
  realization_has_hh_vertex,
  thm_bm_c4p5,
  lemma_reductions_preserve_mdi,
  alpha_le_2_edgeless,
  q_cliques,
  thm_structure_alpha3,
  thm_structure_alpha_gt3,
  corollary_f_p5,
  f_members_are_mdi,
};

inline constexpr std::array kAllChecks = {
    CheckId::thm1_residue_le_alpha,     CheckId::thm2_sandwich,
    CheckId::hh_deletion_gives_residue, CheckId::realization_has_hh_vertex,
    CheckId::thm_bm_c4p5,               CheckId::lemma_reductions_preserve_mdi,
    CheckId::alpha_le_2_edgeless,       CheckId::q_cliques,
    CheckId::thm_structure_alpha3,      CheckId::thm_structure_alpha_gt3,
    CheckId::corollary_f_p5,            CheckId::f_members_are_mdi,
};

inline std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::thm1_residue_le_alpha: return "thm1_residue_le_alpha";
    case CheckId::thm2_sandwich: return "thm2_sandwich";
    case CheckId::hh_deletion_gives_residue: return "hh_deletion_gives_residue";
    case CheckId::realization_has_hh_vertex: return "realization_has_hh_vertex";
    case CheckId::thm_bm_c4p5: return "thm_bm_c4p5";
    case CheckId::lemma_reductions_preserve_mdi: return "lemma_reductions_preserve_mdi";
    case CheckId::alpha_le_2_edgeless: return "alpha_le_2_edgeless";
    case CheckId::q_cliques: return "q_cliques";
    case CheckId::thm_structure_alpha3: return "thm_structure_alpha3";
    case CheckId::thm_structure_alpha_gt3: return "thm_structure_alpha_gt3";
    case CheckId::corollary_f_p5: return "corollary_f_p5";
    case CheckId::f_members_are_mdi: return "f_members_are_mdi";
  }
  return "?";
}

inline std::optional<CheckId> parse_check(std::string_view name) {
  for (CheckId id : kAllChecks) {
    if (check_name(id) == name) return id;
  }
  return std::nullopt;
}

enum class Verdict { pass, fail, not_applicable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Invariants of one graph, computed on first use.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  int residue() {
    if (!residue_) residue_ = reslab::residue(g_);
    return *residue_;
  }
  const MISReport& mis() {
    if (!mis_) mis_ = all_mis(g_);
    return *mis_;
  }
  int alpha() { return mis().alpha; }
  VertexSet mdi() {
    if (!mdi_) mdi_ = g_.order() == 0 ? VertexSet{} : mdi_vertices(g_, mis()).mdi_vertices;
    return *mdi_;
  }
  const MaxineSummary& maxine() {
    if (!maxine_) maxine_ = maxine_all(g_);
    return *maxine_;
  }
  bool p5_star() {
    if (!p5_star_) p5_star_ = has_p5_star(g_, mdi());
    return *p5_star_;
  }

 private:
  const Graph& g_;
  std::optional<int> residue_;
  std::optional<MISReport> mis_;
  std::optional<VertexSet> mdi_;
  std::optional<MaxineSummary> maxine_;
  std::optional<bool> p5_star_;
};

/// Outcome of the two structure searches for an α = 3 graph.
struct StructureResult {
  bool applicable = false;
  bool unanchored = false;  // some unfiltered catalog member is induced in G
  bool anchored = false;    // the reduction pipeline finds one for every MDI vertex
  std::string witness;      // "<member> <roles in G>" from the anchored search
};

/// Evaluates checks. Holds the structure catalogs, grown on demand, so one
/// instance per worker thread.
class Checker {
 public:
  Verdict check(const Graph& g, CheckId id) {
    GraphFacts facts(g);
    return check(facts, id);
  }

  Verdict check(GraphFacts& f, CheckId id) {
    switch (id) {
      case CheckId::thm1_residue_le_alpha:
        return verdict(f.residue() <= f.alpha());
      case CheckId::thm2_sandwich:
        return verdict(f.residue() <= f.maxine().min_size && f.maxine().max_size <= f.alpha());
      case CheckId::hh_deletion_gives_residue: return hh_deletion(f);
      case CheckId::realization_has_hh_vertex: return realization(f);
      case CheckId::thm_bm_c4p5: {
        static const std::vector<Graph> forbidden = {cycle(4), path(5)};
        if (!is_family_free(f.graph(), forbidden)) return Verdict::not_applicable;
        return verdict(f.maxine().min_size == f.alpha());
      }
      case CheckId::lemma_reductions_preserve_mdi: return lemma_reductions(f);
      case CheckId::alpha_le_2_edgeless:
        if (f.order() == 0 || f.mdi().empty() || f.alpha() > 2) return Verdict::not_applicable;
        return verdict(f.graph().edge_count() == 0);
      case CheckId::q_cliques: return q_cliques(f);
      case CheckId::thm_structure_alpha3: {
        const StructureResult r = structure_alpha3(f);
        if (!r.applicable) return Verdict::not_applicable;
        return verdict(r.unanchored && r.anchored);
      }
      case CheckId::thm_structure_alpha_gt3:
        if (!structure_hypothesis(f) || f.alpha() <= 3) return Verdict::not_applicable;
        return verdict(contains_catalog_member(f.graph()));
      case CheckId::corollary_f_p5:
        if (!is_family_free(f.graph(), f_and_p5(f.order()))) return Verdict::not_applicable;
        return verdict(f.maxine().min_size == f.alpha());
      case CheckId::f_members_are_mdi: return f_member_mdi(f);
    }
    return Verdict::not_applicable;
  }

  /// MDI vertex present, α = 3, at least one edge, and no induced P5 centred
  /// at an MDI vertex.
  StructureResult structure_alpha3(GraphFacts& f) {
    StructureResult r;
    if (!structure_hypothesis(f) || f.alpha() != 3) return r;
    r.applicable = true;
    r.unanchored = contains_catalog_member(f.graph());
    r.anchored = true;
    for (Vertex v : f.mdi()) {
      std::optional<std::string> found = anchored_structure(f.graph(), v);
      if (!found) {
        r.anchored = false;
        break;
      }
      if (r.witness.empty()) r.witness = *found;
    }
    return r;
  }

  StructureResult structure_alpha3(const Graph& g) {
    GraphFacts f(g);
    return structure_alpha3(f);
  }

  /// Members of the unfiltered catalog with at most n vertices.
  std::span<const FMember> unfiltered_catalog(int n) { return raw_upto(n); }

  /// Filtered catalog graphs (the operational F) with at most n vertices, plus P5.
  const std::vector<Graph>& f_and_p5(int n) {
    grow(n);
    auto& slot = f_and_p5_[static_cast<std::size_t>(std::clamp(n, 0, kMaxVertices))];
    if (!slot) {
      std::vector<Graph> out;
      for (const FMember& m : raw_) {
        if (m.mdi_verified && m.graph.order() <= n) out.push_back(m.graph);
      }
      out.push_back(path(5));
      slot = std::move(out);
    }
    return *slot;
  }

  /// Anchored pipeline for one MDI vertex v: reduce to a unique maximum
  /// independent set, prune to N(v) ∪ I, partition, then look for a catalog
  /// member with v, u, w pinned. Returns "<member> <roles in G>".
  std::optional<std::string> anchored_structure(const Graph& g, Vertex v) {
    const ReducedGraph reduced = reduce_to_unique_mis(g, v);
    const ReducedGraph pruned = prune_outside(reduced.graph, reduced.center);
    const NeighborhoodPartition part = partition_neighborhood(pruned.graph, pruned.center);
    if (!part.alpha3) return std::nullopt;
    const Alpha3Classes& c = *part.alpha3;
    const Graph& h = pruned.graph;
    for (const FMember& m : raw_upto(h.order())) {
      for (auto [pu, pw] : {std::pair{c.u, c.w}, std::pair{c.w, c.u}}) {
        auto emb = find_induced(h, m.graph,
                                {{FMember::kV, pruned.center}, {FMember::kU, pu}, {FMember::kW, pw}});
        if (!emb) continue;
        bool roles_ok = true;
        for (Vertex x : m.with_role(Role::q)) {
          roles_ok = roles_ok && c.q.contains(emb->map[static_cast<std::size_t>(x)]);
        }
        for (Vertex x : m.with_role(Role::n)) {
          roles_ok = roles_ok && c.n.contains(emb->map[static_cast<std::size_t>(x)]);
        }
        if (!roles_ok) continue;
        std::vector<Vertex> in_g(emb->map.size());
        for (std::size_t i = 0; i < in_g.size(); ++i) {
          const Vertex local = pruned.origin[static_cast<std::size_t>(emb->map[i])];
          in_g[i] = reduced.origin[static_cast<std::size_t>(local)];
        }
        return m.name() + " " + m.role_string(&in_g);
      }
    }
    return std::nullopt;
  }

  bool contains_catalog_member(const Graph& g) {
    for (const FMember& m : raw_upto(g.order())) {
      if (contains_induced(g, m.graph)) return true;
    }
    return false;
  }

 private:
  static Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

  bool structure_hypothesis(GraphFacts& f) {
    return f.order() > 0 && !f.mdi().empty() && f.graph().edge_count() > 0 && !f.p5_star();
  }

  void grow(int n) {
    n = std::min(n, kMaxVertices);
    if (n <= built_upto_ || n < 6) return;
    raw_ = f_catalog(n, false);
    std::stable_sort(raw_.begin(), raw_.end(), [](const FMember& a, const FMember& b) {
      return a.graph.order() < b.graph.order();
    });
    built_upto_ = n;
    for (auto& slot : f_and_p5_) slot.reset();
  }

  std::span<const FMember> raw_upto(int n) {
    grow(n);
    const auto end = std::find_if(raw_.begin(), raw_.end(),
                                  [&](const FMember& m) { return m.graph.order() > n; });
    return {raw_.begin(), end};
  }

  Verdict hh_deletion(GraphFacts& f) {
    const MaxineHHExploration runs = maxine_hh_all(f.graph());
    if (!runs.any_completed) return Verdict::not_applicable;
    return verdict(runs.completed.min_size == f.residue() && runs.completed.max_size == f.residue());
  }

  Verdict realization(GraphFacts& f) {
    const DegreeSequence d = degree_sequence(f.graph());
    const Graph r = hh_realization(d);
    return verdict(degree_sequence(r) == d && (d.empty() || !hh_property_vertices(r).empty()));
  }

  Verdict lemma_reductions(GraphFacts& f) {
    if (f.order() == 0 || f.mdi().empty()) return Verdict::not_applicable;
    const Graph& g = f.graph();
    for (Vertex v : f.mdi()) {
      for (VertexSet keep : f.mis().all_mis) {
        const ReducedGraph red = reduce_to_unique_mis(g, v, keep);
        const MISReport red_mis = all_mis(red.graph);
        if (red_mis.all_mis.size() != 1 || red.lift(red_mis.all_mis.front()) != keep ||
            !has_mdi(red.graph, red.center)) {
          return Verdict::fail;
        }
        const ReducedGraph pruned = prune_outside(red.graph, red.center);
        const MISReport pruned_mis = all_mis(pruned.graph);
        if (pruned_mis.all_mis.size() != 1 || !has_mdi(pruned.graph, pruned.center) ||
            pruned.graph.vertices() !=
                (pruned.graph.neighbors(pruned.center) | pruned_mis.all_mis.front())) {
          return Verdict::fail;
        }
      }
    }
    return Verdict::pass;
  }

  Verdict q_cliques(GraphFacts& f) {
    if (f.order() == 0 || f.mdi().empty() || f.alpha() != 3 || f.p5_star()) {
      return Verdict::not_applicable;
    }
    for (Vertex v : f.mdi()) {
      const ReducedGraph red = reduce_to_unique_mis(f.graph(), v);
      const ReducedGraph pruned = prune_outside(red.graph, red.center);
      const NeighborhoodPartition part = partition_neighborhood(pruned.graph, pruned.center);
      const Alpha3Classes& c = *part.alpha3;
      const Graph& h = pruned.graph;
      if (!h.is_clique(c.q_u) || !h.is_clique(c.q_w) || !h.is_clique(c.q) || alpha(h, c.n) > 2) {
        return Verdict::fail;
      }
    }
    return Verdict::pass;
  }

  Verdict f_member_mdi(GraphFacts& f) {
    if (f.order() < 6) return Verdict::not_applicable;
    for (const FMember& m : raw_upto(f.order())) {
      if (m.graph.order() != f.order()) continue;
      const auto emb = find_induced(f.graph(), m.graph);
      if (!emb) continue;
      return verdict(f.mdi().contains(emb->map[FMember::kV]));
    }
    return Verdict::not_applicable;
  }

  std::vector<FMember> raw_;
  int built_upto_ = 0;
  std::array<std::optional<std::vector<Graph>>, kMaxVertices + 1> f_and_p5_;
};

/// One-off evaluation; each thread keeps its own catalog cache.
inline Verdict check_one(const Graph& g, CheckId id) {
  thread_local Checker checker;
  return checker.check(g, id);
}

// ---------------------------------------------------------------------------
// Scan driver.

struct EnumerationSource {
  int n = 0;
};
struct CorpusSource {
  std::string path;
};
using Source = std::variant<EnumerationSource, CorpusSource>;

inline std::string source_label(const Source& s) {
  if (const auto* e = std::get_if<EnumerationSource>(&s)) {
    return "enumeration(n=" + std::to_string(e->n) + ")";
  }
  return "corpus(" + std::get<CorpusSource>(s).path + ")";
}

struct VerifyReport {
  CheckId check = CheckId::thm1_residue_le_alpha;
  std::string source;
  std::uint64_t scanned = 0;
  std::uint64_t applicable = 0;
  std::vector<std::string> counterexamples;
  std::uint64_t skipped_records = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Stable key order; `elapsed_ms` is the only field that varies between runs.
inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["check"] = std::string(check_name(r.check));
  j["source"] = r.source;
  j["scanned"] = r.scanned;
  j["applicable"] = r.applicable;
  j["counterexamples"] = r.counterexamples;
  j["skipped_records"] = r.skipped_records;
  j["elapsed_ms"] = r.elapsed.count();
  j["tool_version"] = std::string(kToolVersion);
  return j;
}

/// A graph6 corpus read into memory. Records that fail to decode are kept
/// out of `graphs` and described in `errors` ("line N: message").
struct Corpus {
  std::vector<Graph> graphs;
  std::vector<std::size_t> line_numbers;  // 1-based, parallel to graphs
  std::vector<std::string> errors;
};

inline Corpus read_corpus(std::istream& in) {
  Corpus c;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    try {
      c.graphs.push_back(from_graph6(line));
      c.line_numbers.push_back(number);
    } catch (const Graph6Error& e) {
      c.errors.push_back("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return c;
}

inline Corpus read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus " + path);
  return read_corpus(in);
}

struct SuiteOptions {
  int shards = 1;
  /// Hunt mode: keep only the first `stop_after` failures in scan order.
  std::optional<std::size_t> stop_after;
};

/// Per-run diagnostics that do not belong in the report document.
struct SuiteDiagnostics {
  std::vector<std::string> parse_errors;
  std::vector<std::string> oversized;  // records beyond the check size limits
};

namespace detail {

struct Failure {
  std::uint64_t index;
  std::string graph6;
  // Shard-local counts up to and including this graph.
  std::uint64_t scanned_through = 0;
  std::uint64_t applicable_through = 0;
};

struct ShardTally {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::vector<std::uint64_t> applicable;
  std::vector<std::vector<Failure>> failures;
  std::vector<std::uint64_t> oversized_indices;
  std::uint64_t scanned = 0;
};

template <class GraphAt>
ShardTally scan_range(std::uint64_t first, std::uint64_t last, GraphAt&& graph_at,
                      std::span<const CheckId> checks, std::optional<std::size_t> stop_after) {
  ShardTally t;
  t.first = first;
  t.last = last;
  t.applicable.assign(checks.size(), 0);
  t.failures.resize(checks.size());
  Checker checker;
  for (std::uint64_t i = first; i < last; ++i) {
    if (stop_after) {
      bool all_full = true;
      for (const auto& f : t.failures) all_full = all_full && f.size() >= *stop_after;
      if (all_full) break;
    }
    const Graph g = graph_at(i);
    if (g.order() > kAllMisLimit) {
      t.oversized_indices.push_back(i);
      continue;
    }
    ++t.scanned;
    GraphFacts facts(g);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      if (stop_after && t.failures[c].size() >= *stop_after) continue;
      const Verdict v = checker.check(facts, checks[c]);
      if (v == Verdict::not_applicable) continue;
      ++t.applicable[c];
      if (v == Verdict::fail) {
        t.failures[c].push_back({i, to_graph6(g), t.scanned, t.applicable[c]});
      }
    }
  }
  return t;
}

}  // namespace detail

/// Scans every graph of `source` once and evaluates every check. Results do
/// not depend on `options.shards`: failures are merged and either sorted by
/// graph6 string (full runs) or cut to the first `stop_after` in scan order.
inline std::vector<VerifyReport> run_suite(const Source& source, std::span<const CheckId> checks,
                                           const SuiteOptions& options = {},
                                           SuiteDiagnostics* diagnostics = nullptr) {
  const auto start = std::chrono::steady_clock::now();

  std::optional<Corpus> corpus;
  std::uint64_t total = 0;
  std::optional<LabeledGraphs> labeled;
  if (const auto* e = std::get_if<EnumerationSource>(&source)) {
    labeled = enumerate_labeled(e->n);
    total = labeled->size();
  } else {
    corpus = read_corpus(std::get<CorpusSource>(source).path);
    total = corpus->graphs.size();
  }
  auto graph_at = [&](std::uint64_t i) {
    return labeled ? graph_from_mask(labeled->order(), i) : corpus->graphs[i];
  };

  const int shards = std::max(1, options.shards);
  std::vector<detail::ShardTally> tallies(static_cast<std::size_t>(shards));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  {
    std::vector<std::jthread> workers;
    for (int s = 0; s < shards; ++s) {
      const std::uint64_t first = total * static_cast<std::uint64_t>(s) / static_cast<std::uint64_t>(shards);
      const std::uint64_t last = total * static_cast<std::uint64_t>(s + 1) / static_cast<std::uint64_t>(shards);
      workers.emplace_back([&, s, first, last] {
        try {
          tallies[static_cast<std::size_t>(s)] =
              detail::scan_range(first, last, graph_at, checks, options.stop_after);
        } catch (...) {
          errors[static_cast<std::size_t>(s)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const std::uint64_t parse_errors = corpus ? corpus->errors.size() : 0;
  std::uint64_t oversized = 0;
  std::uint64_t scanned = 0;
  for (const auto& t : tallies) {
    oversized += t.oversized_indices.size();
    scanned += t.scanned;
  }
  if (diagnostics) {
    if (corpus) diagnostics->parse_errors = corpus->errors;
    for (const auto& t : tallies) {
      for (std::uint64_t i : t.oversized_indices) {
        diagnostics->oversized.push_back(
            corpus ? "line " + std::to_string(corpus->line_numbers[i]) + ": more than " +
                         std::to_string(kAllMisLimit) + " vertices"
                   : std::to_string(i));
      }
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::vector<VerifyReport> reports;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    VerifyReport r;
    r.check = checks[c];
    r.source = source_label(source);
    r.scanned = scanned;
    r.skipped_records = parse_errors + oversized;
    r.elapsed = elapsed;
    std::vector<detail::Failure> failures;
    for (const auto& t : tallies) {
      r.applicable += t.applicable[c];
      failures.insert(failures.end(), t.failures[c].begin(), t.failures[c].end());
    }
    if (options.stop_after) {
      // Every shard scanned at least up to the global cut-off failure, and the
      // shards before it finished their ranges, so counts taken at the cut-off
      // do not depend on the shard layout.
      std::sort(failures.begin(), failures.end(),
                [](const auto& a, const auto& b) { return a.index < b.index; });
      if (failures.size() >= *options.stop_after && *options.stop_after > 0) {
        failures.resize(*options.stop_after);
        const detail::Failure& cut = failures.back();
        r.scanned = 0;
        r.applicable = 0;
        for (const auto& t : tallies) {
          if (t.last <= cut.index) {
            r.scanned += t.scanned;
            r.applicable += t.applicable[c];
          } else if (t.first <= cut.index) {
            r.scanned += cut.scanned_through;
            r.applicable += cut.applicable_through;
          }
        }
      } else if (*options.stop_after == 0) {
        failures.clear();
      }
      for (auto& f : failures) r.counterexamples.push_back(std::move(f.graph6));
    } else {
      for (auto& f : failures) r.counterexamples.push_back(std::move(f.graph6));
      std::sort(r.counterexamples.begin(), r.counterexamples.end());
      r.counterexamples.erase(std::unique(r.counterexamples.begin(), r.counterexamples.end()),
                              r.counterexamples.end());
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

/// First `stop_after` failing graphs in scan order; empty when the claim holds.
inline std::vector<std::string> hunt(const Source& source, CheckId id, std::size_t stop_after,
                                     int shards = 1) {
  const std::array checks{id};
  SuiteOptions options;
  options.shards = shards;
  options.stop_after = stop_after;
  return run_suite(source, checks, options).front().counterexamples;
}

}  // namespace reslab
