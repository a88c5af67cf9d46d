#include <gtest/gtest.h>

#include <random>

#include "sepdim/generators.hpp"
#include "sepdim/graph.hpp"
#include "sepdim/subdivision.hpp"

using namespace sepdim;

TEST(LoadGraph, ParsesEdgeList) {
  const Graph g = load_graph("1 2\n2 3");
  EXPECT_EQ(g, Graph({1, 2, 3}, {{1, 2}, {2, 3}}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(LoadGraph, EmptyInputGivesEmptyGraph) {
  EXPECT_TRUE(load_graph("").empty());
  EXPECT_TRUE(load_graph("# nothing here\n\n").empty());
}

TEST(LoadGraph, SelfLoopIsRejected) {
  try {
    load_graph("1 1");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(LoadGraph, ReportsLineOfBadInput) {
  try {
    load_graph("1 2\n# ok\n2 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_graph("1 2 3"), ParseError);
  EXPECT_THROW(load_graph("1 2\n2 1"), ParseError);
  EXPECT_THROW(load_graph("-1 2"), ParseError);
}

TEST(LoadGraph, IsolatedVerticesAndComments) {
  const Graph g = load_graph("# header\nv 7\n  1   2 \n\nv 2\n");
  EXPECT_EQ(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()),
            (std::vector<Vertex>{1, 2, 7}));
  EXPECT_EQ(g.degree(7), 0u);
}

TEST(Graph, ConstructorRejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph({}, {{3, 3}}), InvalidArgument);
  EXPECT_THROW(Graph({}, {{1, 2}, {2, 1}}), InvalidArgument);
  EXPECT_THROW(Graph().index_of(0), InvalidArgument);
}

TEST(Graph, EdgeNormalisesEndpoints) {
  const Edge e(5, 2);
  EXPECT_EQ(e.u, 2u);
  EXPECT_EQ(e.v, 5u);
  EXPECT_TRUE(Edge(1, 2).disjoint_from(Edge(3, 4)));
  EXPECT_FALSE(Edge(1, 2).disjoint_from(Edge(2, 4)));
}

TEST(SerializeGraph, RoundTripIsStable) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_gnp_graph(1 + rng() % 15, 0.3, rng());
    const std::string once = serialize_graph(g);
    const Graph back = load_graph(once);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), once);
  }
}

TEST(Subdivide, TriangleBecomesSixCycle) {
  const auto [h, map] = subdivide(complete_graph(3));
  EXPECT_EQ(h.vertex_count(), 6u);
  EXPECT_EQ(h.edge_count(), 6u);
  for (Vertex v : h.vertices()) EXPECT_EQ(h.degree(v), 2u);
  // Connected: walk around from vertex 1.
  Vertex prev = 1, cur = h.vertex_at(h.neighbours_of_index(h.index_of(1))[0]);
  std::size_t steps = 1;
  while (cur != 1) {
    const auto nb = h.neighbours_of_index(h.index_of(cur));
    const Vertex next = h.vertex_at(nb[0]) == prev ? h.vertex_at(nb[1]) : h.vertex_at(nb[0]);
    prev = cur;
    cur = next;
    ++steps;
  }
  EXPECT_EQ(steps, 6u);
  EXPECT_EQ(map.mid_of(1, 2), 4u);
  EXPECT_EQ(map.mid_of(3, 1), 5u);
  EXPECT_EQ(map.mid_of(2, 3), 6u);
}

TEST(Subdivide, CountsForK4) {
  const auto [h, map] = subdivide(complete_graph(4));
  EXPECT_EQ(h.vertex_count(), 10u);
  EXPECT_EQ(h.edge_count(), 12u);
  EXPECT_EQ(map.entries().size(), 6u);
}

TEST(Subdivide, SingleEdgeIsPathOnThree) {
  const auto [h, map] = subdivide(Graph::from_edges({{4, 9}}));
  EXPECT_EQ(h, Graph({4, 9, 10}, {{4, 10}, {9, 10}}));
  EXPECT_EQ(map.entry_for_mid(10), (SubdividedEdge{4, 9, 10}));
  EXPECT_TRUE(map.is_original(9));
  EXPECT_FALSE(map.is_original(10));
  EXPECT_THROW(map.mid_of(4, 5), InvalidArgument);
  EXPECT_THROW(map.entry_for_mid(4), InvalidArgument);
}

TEST(Subdivide, StructureOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_gnp_graph(9, 0.4, seed);
    const auto [h, map] = subdivide(g);
    EXPECT_EQ(h.vertex_count(), g.vertex_count() + g.edge_count());
    EXPECT_EQ(h.edge_count(), 2 * g.edge_count());
    for (const auto& s : map.entries()) {
      EXPECT_EQ(h.degree(s.mid), 2u);
      EXPECT_TRUE(h.has_edge(s.left, s.mid));
      EXPECT_TRUE(h.has_edge(s.mid, s.right));
      EXPECT_TRUE(g.has_edge(s.left, s.right));
    }
    for (Vertex v : g.vertices()) EXPECT_EQ(h.degree(v), g.degree(v));
  }
}

TEST(Generators, RandomDegenerateHasExpectedShape) {
  const Graph g = random_degenerate_graph(50, 3, 5);
  EXPECT_EQ(g.vertex_count(), 50u);
  EXPECT_EQ(g.edge_count(), 0u + 1 + 2 + 3 * 47);
  EXPECT_EQ(random_degenerate_graph(50, 3, 5), g);
}
