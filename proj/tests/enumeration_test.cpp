#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "hist/enumeration.hpp"
#include "oracles.hpp"

namespace hist {
namespace {

TEST(Enumerate, CountsAtFourVertices) {
  std::size_t all = 0, conn = 0;
  enumerate_labeled(4, {}, [&](const Graph&, std::uint64_t) { ++all; });
  enumerate_labeled(4, {.connectivity = Connectivity::connected}, [&](const Graph&, std::uint64_t) { ++conn; });
  EXPECT_EQ(all, 64U);
  EXPECT_EQ(conn, 38U);
}

TEST(Enumerate, ConnectedCountsMatchRecurrence) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::uint64_t conn = 0;
    enumerate_labeled(n, {.connectivity = Connectivity::connected}, [&](const Graph&, std::uint64_t) { ++conn; });
    EXPECT_EQ(conn, oracle::connected_labeled_count(n)) << n;
  }
  EXPECT_EQ(oracle::connected_labeled_count(7), 1866256U);
}

TEST(Enumerate, FiltersAndMaskOrder) {
  const auto k3 = collect_labeled(3, {.min_edges = 3});
  ASSERT_EQ(k3.size(), 1U);
  EXPECT_EQ(k3.front(), complete_graph(3));
  std::uint64_t last = 0;
  bool first = true;
  enumerate_labeled(5, {.min_max_degree = 4}, [&](const Graph& g, std::uint64_t mask) {
    EXPECT_TRUE(first || mask > last);
    first = false;
    last = mask;
    EXPECT_EQ(g.edge_mask(), mask);
    EXPECT_EQ(max_degree(g), 4U);
  });
  EXPECT_THROW(enumerate_labeled(9, {}, [](const Graph&, std::uint64_t) {}), UnsupportedError);
}

TEST(Enumerate, TwoConnectedMatchesBruteForce) {
  std::uint64_t count = 0;
  enumerate_labeled(6, {.connectivity = Connectivity::two_connected}, [&](const Graph& g, std::uint64_t) {
    ++count;
    ASSERT_TRUE(oracle::connected(g) && oracle::cut_vertices(g).empty());
  });
  // Labeled 2-connected graphs on 6 vertices.
  EXPECT_EQ(count, 11368U);
}

TEST(MaskRows, AgreeWithGraph) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto pairs = detail::pair_table(n);
    enumerate_labeled(n, {}, [&](const Graph& g, std::uint64_t mask) {
      const auto rows = detail::mask_rows(n, mask, pairs);
      for (Vertex v = 0; v < n; ++v)
        ASSERT_EQ(static_cast<std::size_t>(std::popcount(rows.row[v])), g.degree(v));
      const bool conn = oracle::connected(g);
      ASSERT_EQ(rows.connected_without(0), conn);
      ASSERT_EQ(rows.two_connected(), conn && oracle::cut_vertices(g).empty());
    });
  }
}

// The bitmask HIST decision is exact: compared with the spanning-tree oracle.
TEST(SmallHist, ExactAgainstOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto pairs = detail::pair_table(n);
    enumerate_labeled(n, {.connectivity = Connectivity::connected}, [&](const Graph& g, std::uint64_t mask) {
      ASSERT_EQ(detail::small_hist(detail::mask_rows(n, mask, pairs)), oracle_hist(g, {.stop_at_first = true}).hists > 0)
          << mask;
    });
  }
  std::mt19937_64 rng(37);
  for (std::size_t n : {7, 8, 9}) {
    const auto pairs = detail::pair_table(n);
    for (int i = 0; i < 2000; ++i) {
      const Graph g = oracle::random_connected(n, rng);
      ASSERT_EQ(detail::small_hist(detail::mask_rows(n, g.edge_mask(), pairs)),
                oracle_hist(g, {.stop_at_first = true}).hists > 0);
    }
  }
  EXPECT_FALSE(detail::small_hist(detail::mask_rows(8, make_B(8).edge_mask(), detail::pair_table(8))));
  EXPECT_THROW(detail::small_hist(detail::MaskRows{.n = 10}), UnsupportedError);
}

TEST(MaskCompare, AgreesWithEigensolver) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 3 + rng() % 6;
    const Graph g = oracle::random_connected(n, rng);
    const double rho = oracle::dense_rho(g);
    const auto rows = detail::mask_rows(n, g.edge_mask(), detail::pair_table(n));
    for (double cut : {rho - 1e-6, rho + 1e-6, 3.5}) {
      const auto d = detail::mask_compare(rows, cut, 500);
      if (d) {
        ASSERT_EQ(*d, rho >= cut) << rho << ' ' << cut;
      }
    }
  }
}

TEST(Threshold, MatchesQuarticRoot) {
  EXPECT_NEAR(statement_threshold(Statement::connected_L, 7), 4.054795889523815, 1e-10);
  EXPECT_NEAR(statement_threshold(Statement::two_connected_B, 8), 4.1139449436004805, 1e-10);
}

TEST(Verify, ConnectedStatementAtSeven) {
  const auto r = verify_theorem1(7);
  EXPECT_EQ(r.scanned, std::uint64_t{1} << 21);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.arithmetic_holds());
  EXPECT_EQ(r.extremal_matches, oracle::factorial(7) / oracle::automorphisms(make_L(7)));
  EXPECT_EQ(r.theorem, "thm1");
  EXPECT_LE(r.over_threshold, r.prescreen_survivors);
}

// Without the prescreens every hypothesis graph reaches the eigensolver; the verdicts agree.
TEST(Verify, PrescreensDoNotChangeTheOutcome) {
  const auto with = verify_theorem1(7, {.collect_over_threshold = true});
  const auto without = verify_theorem1(7, {.prescreens = false, .collect_over_threshold = true});
  EXPECT_EQ(with.over_threshold_masks, without.over_threshold_masks);
  EXPECT_EQ(with.extremal_matches, without.extremal_matches);
  EXPECT_EQ(with.hists_found, without.hists_found);
  EXPECT_EQ(without.prescreen_survivors, oracle::connected_labeled_count(7));
}

TEST(Verify, LoweringThresholdAdmitsMoreGraphs) {
  const auto base = verify_theorem1(7);
  const auto low = verify_theorem1(7, {.threshold_override = 3.5});
  EXPECT_GT(low.over_threshold, base.over_threshold);
  EXPECT_TRUE(low.arithmetic_holds());
  // L_7 minus a clique edge has rho above 3.5 and no HIST.
  EXPECT_FALSE(low.passed());
}

TEST(Verify, ThreadsAndShardsAreDeterministic) {
  const auto a = verify_theorem1(7, {.threads = 1, .collect_over_threshold = true});
  const auto b = verify_theorem1(7, {.threads = 3, .collect_over_threshold = true, .shard_size = 4096});
  EXPECT_EQ(a.over_threshold_masks, b.over_threshold_masks);
  EXPECT_EQ(a.hists_found, b.hists_found);
  EXPECT_EQ(a.prescreen_survivors, b.prescreen_survivors);
}

TEST(Verify, SubsampleIsDeterministic) {
  const auto a = verify_theorem1(7, {.subsample = 16});
  const auto b = verify_theorem1(7, {.subsample = 16});
  EXPECT_EQ(a.scanned, b.scanned);
  EXPECT_GT(a.scanned, (std::uint64_t{1} << 21) / 20);
  EXPECT_LT(a.scanned, (std::uint64_t{1} << 21) / 12);
}

TEST(Verify, RejectsBadOrders) {
  EXPECT_THROW(verify_theorem1(6), InputError);
  EXPECT_THROW(verify_theorem2(7), InputError);
  EXPECT_THROW(verify_theorem2(9), UnsupportedError);
}

TEST(Verify, CorpusPath) {
  std::ostringstream text;
  text << ">>graph6<<" << encode_graph6(make_B(9)) << '\n'
       << encode_graph6(complete_graph(9)) << '\n'
       << encode_graph6(cycle_graph(9)) << '\n';
  Graph almost = make_B(9);
  almost.add_edge(1, 5);
  text << encode_graph6(almost) << '\n';
  std::istringstream in(text.str());
  const auto r = verify_corpus(Statement::two_connected_B, 9, in);
  EXPECT_EQ(r.source, Source::graph6_corpus);
  EXPECT_EQ(r.scanned, 4U);
  EXPECT_EQ(r.extremal_matches, 1U);
  EXPECT_EQ(r.hists_found, 2U);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.arithmetic_holds());

  std::istringstream mixed(encode_graph6(complete_graph(8)) + "\n");
  EXPECT_THROW(verify_corpus(Statement::two_connected_B, 9, mixed), InputError);
}

// A graph with no HIST above a lowered threshold is reported as a counterexample.
TEST(Verify, CorpusReportsCounterexamples) {
  Graph g = make_L(9);
  g.remove_edge(3, 4); // still no HIST: vertex 1 is a degree-2 cut vertex
  std::istringstream in(encode_graph6(g) + "\n");
  const auto r = verify_corpus(Statement::connected_L, 9, in, {.threshold_override = 1.0});
  ASSERT_EQ(r.counterexamples.size(), 1U);
  EXPECT_EQ(decode_graph6(r.counterexamples.front()), g);
  EXPECT_FALSE(r.passed());
}

TEST(Audit, SmallSubsampleAgrees) {
  const auto a = audit_prescreens(Statement::connected_L, 7, 8);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.over_with, a.over_without);
  EXPECT_GT(a.sampled, 0U);
}

TEST(Corollaries, RangeHolds) {
  const auto rep = verify_corollaries(7, 40);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rows.size(), 34U + 33U);
  for (const auto& row : rep.rows) {
    EXPECT_NEAR(row.rho, oracle::dense_rho(row.family == Family::L ? make_L(row.n) : make_B(row.n)), 1e-8);
    EXPECT_LT(row.slack.slack, row.slack.tight_upper);
  }
  EXPECT_THROW(verify_corollaries(6, 9), InputError);
}

TEST(Certificates, Sweep) {
  const auto rep = verify_certificates(5, 9);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.graphs_checked, 4U + 38U + 728U);
  EXPECT_GT(rep.certificates_fired, 0U);
  EXPECT_THROW(verify_certificates(8), UnsupportedError);
}

} // namespace
} // namespace hist
