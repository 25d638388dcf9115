#pragma once

// graph6 codec restricted to the single-byte length form (n <= 62).
//
// Record layout: one byte n+63, then the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// zero-padded, each group written as value+63.

#include <cstddef>
#include <string>
#include <string_view>

#include "reslab/errors.hpp"
#include "reslab/graph.hpp"

namespace reslab {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices) throw LimitExceeded("graph6 encoder supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos >= text.size()) throw Graph6Error("missing length byte", pos);

  const int lead = static_cast<unsigned char>(text[pos]);
  if (lead == 126) throw Graph6Error("multi-byte length (n > 62) not supported", pos);
  if (lead < 63 || lead > 125) throw Graph6Error("malformed length byte", pos);
  const int n = lead - 63;
  if (n > kMaxVertices) throw Graph6Error("n > 62 not supported", pos);
  ++pos;

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() - pos < payload) {
    throw Graph6Error("truncated payload", text.size());
  }

  for (std::size_t k = 0; k < payload; ++k) {
    const int byte = static_cast<unsigned char>(text[pos + k]);
    if (byte < 63 || byte > 126) throw Graph6Error("non-printable payload byte", pos + k);
  }
  auto bit_at = [&](std::size_t index) {
    const int value = static_cast<unsigned char>(text[pos + index / 6]) - 63;
    return ((value >> (5 - index % 6)) & 1) != 0;
  };
  for (std::size_t index = bits; index < payload * 6; ++index) {
    if (bit_at(index)) throw Graph6Error("non-zero padding bit", pos + index / 6);
  }

  Graph g(n);
  std::size_t index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      if (bit_at(index)) g.add_edge(i, j);
    }
  }
  pos += payload;
  if (pos != text.size()) throw Graph6Error("trailing garbage", pos);
  return g;
}

}  // namespace reslab
