#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <string>
#include <unordered_set>

#include "oracles.hpp"
#include "reslab/enumerate.hpp"
#include "reslab/graph.hpp"
#include "reslab/graph6.hpp"
#include "reslab/patterns.hpp"

namespace reslab {
namespace {

std::vector<Graph> load(const std::string& name) {
  std::ifstream in(std::string(RESLAB_TEST_DATA) + "/" + name);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  return out;
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_LT((VertexSet{0, 2}), (VertexSet{1, 3}));
  EXPECT_LT((VertexSet{0, 2}), (VertexSet{0, 3}));
  EXPECT_LT((VertexSet{0}), (VertexSet{0, 1}));
  EXPECT_EQ((VertexSet{4, 1}).members(), (std::vector<Vertex>{1, 4}));
}

TEST(Graph, RejectsSelfLoopAndRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  EXPECT_THROW(Graph(63), LimitExceeded);
  EXPECT_NO_THROW(Graph(62));
}

TEST(Graph6, DecodesKnownRecords) {
  EXPECT_EQ(from_graph6("Bw"), (Graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  EXPECT_EQ(from_graph6("C?"), Graph(4));
  EXPECT_EQ(from_graph6("Cl"), (Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  EXPECT_EQ(from_graph6(">>graph6<<Bw"), complete(3));
  EXPECT_EQ(from_graph6("?"), Graph(0));
}

TEST(Graph6, EncodesKnownGraphs) {
  EXPECT_EQ(to_graph6(complete(3)), "Bw");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(cycle(4)), "Cl");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, ReportsErrorOffsets) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      from_graph6(text);
    } catch (const Graph6Error& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("\x1f"), 0u);          // below the printable range
  EXPECT_EQ(offset_of("~"), 0u);             // multi-byte length: n > 62
  EXPECT_EQ(offset_of("Cl!"), 2u);           // trailing garbage
  EXPECT_EQ(offset_of("D\x01?"), 1u);        // non-printable payload byte
  EXPECT_EQ(offset_of("D?"), 2u);            // truncated: D needs two bytes
  EXPECT_EQ(offset_of("Bx"), 1u);            // padding bit set
  EXPECT_EQ(offset_of(">>graph6<<"), 10u);
}

TEST(Graph6, LargestOrderRoundTrips) {
  std::mt19937_64 rng(62);
  const Graph g = oracle::random_graph(62, 0.5, rng);
  const std::string text = to_graph6(g);
  EXPECT_EQ(text.size(), 1u + (62u * 61u / 2u + 5u) / 6u);
  EXPECT_EQ(from_graph6(text), g);
}

TEST(Graph6, RoundTripAllGraphsUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      const std::string text = to_graph6(g);
      ASSERT_EQ(from_graph6(text), g) << text;
      ASSERT_EQ(to_graph6(from_graph6(text)), text);
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete(3)), Graph(3));
  EXPECT_TRUE(oracle::isomorphic(complement(cycle(5)), cycle(5)));
  EXPECT_EQ(complement(cycle(4)), (Graph(4, {{0, 2}, {1, 3}})));
}

TEST(Complement, InvolutionAndDegreeMirror) {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      const Graph c = complement(g);
      ASSERT_EQ(complement(c), g);
      std::vector<int> d = oracle::sorted_degrees(g);
      std::vector<int> dc = oracle::sorted_degrees(c);
      for (int i = 0; i < n; ++i) {
        ASSERT_EQ(dc[static_cast<std::size_t>(i)], n - 1 - d[static_cast<std::size_t>(n - 1 - i)]);
      }
    }
  }
}

TEST(Induced, Examples) {
  const Graph c4 = cycle(4);
  EXPECT_EQ(induced(c4, c4.vertices()), c4);
  EXPECT_EQ(induced(c4, {0, 1, 2}), path(3));
  EXPECT_EQ(induced(c4, {}), Graph(0));
  EXPECT_THROW(induced(c4, {0, 4}), PreconditionError);
}

TEST(Induced, KeepsAscendingOrder) {
  // Vertex 3 of C4 sees 0 and 2; relabelled it becomes 2 and sees 0 only.
  EXPECT_EQ(induced(cycle(4), {0, 1, 3}), (Graph(3, {{0, 1}, {0, 2}})));
}

TEST(DeleteVertex, Examples) {
  EXPECT_EQ(delete_vertex(path(3), 1), Graph(2));
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_TRUE(oracle::isomorphic(delete_vertex(cycle(4), v), path(3)));
  }
  EXPECT_EQ(delete_vertex(Graph(1), 0), Graph(0));
  EXPECT_THROW(delete_vertex(Graph(2), 2), PreconditionError);
}

TEST(DeleteVertex, MatchesInducedComplement) {
  for (const Graph& g : enumerate_labeled(5)) {
    for (Vertex v = 0; v < 5; ++v) {
      VertexSet rest = g.vertices();
      rest.erase(v);
      ASSERT_EQ(delete_vertex(g, v), induced(g, rest));
      ASSERT_EQ(delete_vertex(g, v), oracle::remove(g, v));
    }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_labeled(3).size(), 8u);
  EXPECT_EQ(enumerate_labeled(7).size(), 2097152u);
  const LabeledGraphs zero = enumerate_labeled(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(*zero.begin(), Graph(0));
  EXPECT_THROW(enumerate_labeled(9), LimitExceeded);
  EXPECT_THROW(enumerate_labeled(8, 7), LimitExceeded);
}

TEST(Enumerate, EdgeMaskOrderAndDistinctness) {
  std::unordered_set<std::string> seen;
  std::uint64_t expected = 0;
  for (auto it = enumerate_labeled(5).begin(); it != enumerate_labeled(5).end(); ++it) {
    ASSERT_EQ(it.mask(), expected++);
    const Graph g = *it;
    ASSERT_EQ(edge_mask(g), it.mask());
    ASSERT_EQ(g, oracle::from_mask(5, it.mask()));
    ASSERT_TRUE(seen.insert(to_graph6(g)).second);
  }
  EXPECT_EQ(seen.size(), 1024u);
}

TEST(CanonicalForm, Examples) {
  const Graph c4a = cycle(4);
  const Graph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(c4a), canonical_form(c4b));
  EXPECT_NE(canonical_form(complete(3)), canonical_form(path(3)));
  EXPECT_THROW(canonical_form(Graph(9)), LimitExceeded);
}

TEST(CanonicalForm, DedupCountsUpToSix) {
  const std::vector<std::size_t> expected = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::unordered_set<std::uint64_t> classes;
    for (const Graph& g : enumerate_labeled(n)) classes.insert(canonical_mask(g));
    EXPECT_EQ(classes.size(), expected[static_cast<std::size_t>(n - 1)]) << "n = " << n;
  }
}

TEST(CanonicalForm, AgreesWithPermutationSearchOnFiveVertexClasses) {
  const std::vector<Graph> reps = load("graphs5.g6");
  ASSERT_EQ(reps.size(), 34u);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      ASSERT_EQ(canonical_form(reps[i]) == canonical_form(reps[j]),
                oracle::isomorphic(reps[i], reps[j]))
          << i << " vs " << j;
    }
  }
}

TEST(CanonicalForm, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const Graph h = oracle::relabel(g, oracle::random_permutation(n, rng));
    ASSERT_EQ(canonical_form(g), canonical_form(h));
    // The canonical record decodes to an isomorphic graph.
    ASSERT_TRUE(oracle::isomorphic(from_graph6(canonical_form(g)), g));
  }
}

}  // namespace
}  // namespace reslab
