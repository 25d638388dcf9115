#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"

namespace reslab {

/// Non-increasing list of non-negative integers.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {  // NOLINT
    for (int e : entries_) {
      if (e < 0) throw PreconditionError("negative degree " + std::to_string(e));
    }
    std::stable_sort(entries_.begin(), entries_.end(), std::greater<>());
  }
  DegreeSequence(std::initializer_list<int> entries)
      : DegreeSequence(std::vector<int>(entries)) {}

  /// Comma- or whitespace-separated non-negative integers, sorted on parse.
  static DegreeSequence parse(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i;
        continue;
      }
      int value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || value < 0) {
        throw PreconditionError("bad degree sequence token at position " + std::to_string(i));
      }
      out.push_back(value);
      i = static_cast<std::size_t>(end - text.data());
    }
    return DegreeSequence(std::move(out));
  }

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  int zero_count() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0));
  }
  bool all_zero() const { return zero_count() == static_cast<int>(entries_.size()); }

  bool operator==(const DegreeSequence&) const = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> entries_;
};

inline DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

struct HHTrace {
  std::vector<DegreeSequence> steps;
  int terminal_zero_count = 0;
};

namespace detail {

inline DegreeSequence hh_step_at(const DegreeSequence& d, int step) {
  if (d.empty() || d[0] < 1) {
    throw PreconditionError("Havel-Hakimi step needs a positive leading entry");
  }
  const auto lead = static_cast<std::size_t>(d[0]);
  const std::vector<int>& in = d.entries();
  if (lead > in.size() - 1) {
    throw NonGraphic("leading entry " + std::to_string(lead) + " exceeds the " +
                         std::to_string(in.size() - 1) + " remaining entries",
                     step);
  }
  std::vector<int> rest(in.begin() + 1, in.end());
  for (std::size_t i = 0; i < lead; ++i) {
    if (--rest[i] < 0) throw NonGraphic("entry would become negative", step);
  }
  return DegreeSequence(std::move(rest));
}

}  // namespace detail

/// Remove d1 and decrement the next d1 entries, then re-sort.
inline DegreeSequence hh_step(const DegreeSequence& d) { return detail::hh_step_at(d, 0); }

inline HHTrace hh_trace(const DegreeSequence& d) {
  HHTrace trace;
  trace.steps.push_back(d);
  while (!trace.steps.back().all_zero()) {
    const int step = static_cast<int>(trace.steps.size()) - 1;
    trace.steps.push_back(detail::hh_step_at(trace.steps.back(), step));
  }
  trace.terminal_zero_count = trace.steps.back().zero_count();
  return trace;
}

inline bool is_graphic(const DegreeSequence& d) {
  try {
    hh_trace(d);
    return true;
  } catch (const NonGraphic&) {
    return false;
  }
}

/// Number of zeros left when Havel-Hakimi terminates. Throws NonGraphic.
inline int residue_seq(const DegreeSequence& d) { return hh_trace(d).terminal_zero_count; }

inline int residue(const Graph& g) { return residue_seq(degree_sequence(g)); }

/// Havel-Hakimi construction of a realization of d: the vertex holding the
/// largest residual demand is joined to the next-largest ones. Vertex 0 ends
/// up with the top entry and the d1 next-largest entries as its neighbors.
inline Graph hh_realization(const DegreeSequence& d) {
  const int n = static_cast<int>(d.size());
  Graph g(n);
  std::vector<int> demand(d.entries());
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int step = 0; n > 0; ++step) {
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return demand[static_cast<std::size_t>(a)] > demand[static_cast<std::size_t>(b)];
    });
    const Vertex top = order[0];
    const int need = demand[static_cast<std::size_t>(top)];
    if (need == 0) break;
    if (need > n - 1) throw NonGraphic("sequence is not graphic", step);
    demand[static_cast<std::size_t>(top)] = 0;
    for (int k = 1; k <= need; ++k) {
      const Vertex other = order[static_cast<std::size_t>(k)];
      if (--demand[static_cast<std::size_t>(other)] < 0) {
        throw NonGraphic("sequence is not graphic", step);
      }
      g.add_edge(top, other);
    }
  }
  return g;
}

}  // namespace reslab
