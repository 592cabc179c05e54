#include <random>

#include <gtest/gtest.h>

#include "hist/enumeration.hpp"
#include "hist/graph.hpp"
#include "oracles.hpp"

namespace hist {
namespace {

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < g.order(); ++v)
      EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    degree_sum += g.degree(u);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
}

TEST(Graph, DegreeExamples) {
  EXPECT_EQ(degree(complete_graph(4), 2), 3U);
  EXPECT_EQ(degree(make_L(7), 0), 1U); // pendant vertex
  EXPECT_EQ(degree(path_graph(3), 1), 2U);
  EXPECT_THROW(degree(complete_graph(4), 4), InputError);
}

TEST(Graph, MaxMinDegree) {
  const Graph l7 = make_L(7);
  EXPECT_EQ(max_degree(l7), 5U);
  EXPECT_EQ(min_degree(l7), 1U);
}

TEST(Graph, ConstructorsAreWellFormed) {
  for (const Graph& g : {complete_graph(6), path_graph(5), cycle_graph(7), complete_bipartite(2, 5), make_L(9),
                         make_B(10), star_graph(6), Graph(1), Graph(2, {{0, 1}})})
    expect_well_formed(g);
}

TEST(Graph, MutationKeepsSymmetry) {
  Graph g(5);
  g.add_edge(3, 1);
  g.add_edge(1, 3);
  EXPECT_EQ(g.size(), 1U);
  g.add_edge(0, 4);
  g.remove_edge(1, 3);
  EXPECT_EQ(g.size(), 1U);
  expect_well_formed(g);
  EXPECT_THROW(g.add_edge(2, 2), InputError);
  EXPECT_THROW(g.add_edge(0, 5), InputError);
}

TEST(Graph, WideGraphsUseMultipleWords) {
  Graph g = path_graph(130);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.size(), 129U);
  EXPECT_TRUE(g.has_edge(63, 64));
  EXPECT_TRUE(g.has_edge(128, 129));
  EXPECT_EQ(cut_vertices(g).size(), 128U);
  expect_well_formed(g);
}

TEST(Graph, EdgeMaskRoundTrip) {
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    EXPECT_EQ(Graph::from_edge_mask(4, mask).edge_mask(), mask);
  EXPECT_THROW(Graph::from_edge_mask(12, 0), InputError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(complete_graph(5)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(make_B(8)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_THROW(is_connected(Graph(0)), InputError);
}

TEST(CutVertices, Examples) {
  // L_7: the degree-2 path vertex and its clique attachment.
  EXPECT_EQ(cut_vertices(make_L(7)).members(), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(cut_vertices(make_L(7)).members(), oracle::cut_vertices(make_L(7)));
  EXPECT_TRUE(cut_vertices(complete_graph(6)).empty());
  EXPECT_EQ(cut_vertices(path_graph(4)).members(), (std::vector<Vertex>{1, 2}));
  EXPECT_THROW(cut_vertices(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST(CutVertices, TwoConnectedExamples) {
  EXPECT_TRUE(is_2_connected(make_B(8)));
  EXPECT_FALSE(is_2_connected(make_L(7)));
  EXPECT_TRUE(is_2_connected(cycle_graph(5)));
  EXPECT_THROW(is_2_connected(complete_graph(2)), InputError);
}

// Exhaustive over labeled graphs n <= 6: both characterisations agree with vertex deletion.
TEST(CutVertices, AgreeWithBruteForceExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n)
    enumerate_labeled(n, {}, [&](const Graph& g, std::uint64_t) {
      const bool conn = is_connected(g);
      ASSERT_EQ(conn, oracle::connected(g));
      if (!conn)
        return;
      const auto cuts = cut_vertices(g).members();
      ASSERT_EQ(cuts, oracle::cut_vertices(g)) << "mask " << g.edge_mask();
      if (n >= 3) {
        const bool brute = oracle::cut_vertices(g).empty();
        ASSERT_EQ(is_2_connected(g), brute);
        ASSERT_EQ(is_2_connected(g), cuts.empty());
      }
    });
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete_graph(5), VertexSet(5, {0, 2, 4})), complete_graph(3));
  EXPECT_EQ(induced_subgraph(make_L(7), VertexSet(7, {2, 3, 4, 5, 6})), complete_graph(5));
  // u_1..u_5 of B_8: P_3 ends, middle, and the two attachments.
  const Graph c = induced_subgraph(make_B(8), VertexSet(8, {0, 1, 2, 3, 4}));
  EXPECT_TRUE(oracle::isomorphic(c, cycle_graph(5)));
  EXPECT_THROW(induced_subgraph(complete_graph(3), VertexSet(3)), InputError);
  EXPECT_THROW(induced_subgraph(complete_graph(3), VertexSet(4, {0})), InputError);
}

TEST(Families, EdgeCounts) {
  EXPECT_EQ(make_family(Family::L, {7}).size(), 12U);
  EXPECT_EQ(make_family(Family::B, {8}).size(), 14U);
  EXPECT_EQ(make_family(Family::complete, {4}).size(), 6U);
  EXPECT_EQ(make_family(Family::complete_bipartite, {2, 8}).size(), 16U);
  EXPECT_EQ(make_family(Family::star, {6}).order(), 7U);
  EXPECT_EQ(make_family(Family::cycle, {5}).size(), 5U);
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(make_family(Family::L, {3}), InputError);
  EXPECT_THROW(make_family(Family::B, {5}), InputError);
  EXPECT_THROW(make_family(Family::complete_bipartite, {0, 3}), InputError);
  EXPECT_THROW(make_family(Family::complete_bipartite, {3}), InputError);
  EXPECT_THROW(make_family(Family::cycle, {2}), InputError);
  EXPECT_THROW(family_from_name("Q"), InputError);
}

TEST(Families, LabellingContract) {
  const Graph l = make_L(7);
  EXPECT_EQ(l.neighbors(0), (std::vector<Vertex>{1}));
  EXPECT_EQ(l.neighbors(1), (std::vector<Vertex>{0, 2}));
  const Graph b = make_B(8);
  EXPECT_EQ(b.neighbors(1), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(b.has_edge(0, 3));
  EXPECT_TRUE(b.has_edge(2, 4));
  EXPECT_FALSE(b.has_edge(0, 4));
}

TEST(Recognition, InvariantUnderRelabelling) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 4; n <= 12; ++n)
    for (int k = 0; k < 20; ++k)
      EXPECT_TRUE(matches_Ln(oracle::relabel(make_L(n), oracle::random_permutation(n, rng))));
  for (std::size_t n = 6; n <= 12; ++n)
    for (int k = 0; k < 20; ++k)
      EXPECT_TRUE(matches_Bn(oracle::relabel(make_B(n), oracle::random_permutation(n, rng))));
}

TEST(Recognition, Negatives) {
  EXPECT_FALSE(matches_Ln(complete_graph(7)));
  EXPECT_FALSE(matches_Bn(complete_graph(8)));
  Graph b = make_B(8);
  b.remove_edge(5, 6);
  EXPECT_FALSE(matches_Bn(b));
  EXPECT_FALSE(matches_Ln(make_B(8)));
  EXPECT_FALSE(matches_Bn(make_L(8)));
  EXPECT_TRUE(matches_Ln(path_graph(4))); // L_4 is P_4
}

// Every connected labeled 7-vertex graph with L_7's degree sequence: fingerprint == brute force.
TEST(Recognition, FingerprintMatchesBruteForceIsomorphism) {
  const Graph l7 = make_L(7);
  auto sorted_degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
      d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto target = sorted_degrees(l7);
  std::size_t candidates = 0, hits = 0;
  enumerate_labeled(7, {.min_edges = l7.size(), .connectivity = Connectivity::connected},
                    [&](const Graph& g, std::uint64_t) {
                      if (g.size() != l7.size() || sorted_degrees(g) != target)
                        return;
                      ++candidates;
                      const bool brute = oracle::isomorphic(g, l7);
                      ASSERT_EQ(matches_Ln(g), brute);
                      hits += brute ? 1 : 0;
                    });
  EXPECT_GT(candidates, hits);
  EXPECT_EQ(hits, oracle::factorial(7) / oracle::automorphisms(l7));
}

} // namespace
} // namespace hist
