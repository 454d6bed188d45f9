#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "isolab/error.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "support.hpp"

namespace isolab {
namespace {

Graph two_triangles() {
  return Graph::from_edges(6, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}, Edge{4, 5}, Edge{3, 5}});
}

TEST(Ratio, ComparesByValue) {
  EXPECT_EQ((Ratio{7, 4}), (Ratio{14, 8}));
  EXPECT_LT((Ratio{2, 3}), (Ratio{3, 4}));
  EXPECT_EQ((Ratio{14, 8}).reduced().to_string(), "7/4");
  EXPECT_DOUBLE_EQ((Ratio{1, 4}).to_double(), 0.25);
}

TEST(FourthRoot, ExactCeiling) {
  EXPECT_EQ(ceil_fourth_root(1), 1u);
  EXPECT_EQ(ceil_fourth_root(16), 2u);
  EXPECT_EQ(ceil_fourth_root(17), 3u);
  EXPECT_EQ(ceil_fourth_root(81), 3u);
  EXPECT_EQ(ceil_fourth_root(3000), 8u);
  EXPECT_EQ(ceil_fourth_root(10'000), 10u);
  EXPECT_EQ(ceil_fourth_root(10'001), 11u);
}

TEST(IsoExact, SmallExamples) {
  const auto k2 = iso_exact(complete_graph(2));
  EXPECT_EQ(k2.ratio, (Ratio{1, 1}));
  EXPECT_EQ(k2.witness, VertexSet(2, {0}));

  EXPECT_EQ(iso_exact(two_triangles()).ratio, (Ratio{0, 1}));

  const auto c4 = iso_exact(cycle_graph(4));
  EXPECT_EQ(c4.ratio, (Ratio{1, 1}));
  EXPECT_EQ(c4.witness, VertexSet(4, {0, 1}));

  const auto k4 = iso_exact(complete_graph(4));
  EXPECT_EQ(k4.ratio, (Ratio{2, 1}));
  EXPECT_EQ(k4.witness, VertexSet(4, {0, 1}));
}

// The complete graph attains ceil(n/2), not (n-1)/2.
TEST(IsoExact, CompleteGraphIsCeilHalf) {
  for (Vertex n = 2; n <= 12; ++n) {
    EXPECT_EQ(iso_exact(complete_graph(n)).ratio, (Ratio{(n + 1) / 2, 1})) << "n = " << n;
  }
}

TEST(IsoExact, Preconditions) {
  EXPECT_THROW(iso_exact(Graph(1)), DomainError);
  SolverConfig cfg;
  cfg.exact_cap = 10;
  EXPECT_THROW(iso_exact(cycle_graph(11), cfg), DomainError);
  cfg.exact_cap = 31;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(IsoExact, MatchesOracleOnRandomGraphs) {
  for (Vertex n = 2; n <= 10; ++n) {
    for (std::uint64_t k = 0; k < 60; ++k) {
      const double p = 0.1 + 0.1 * static_cast<double>(k % 9);
      const Graph g = sample_gnp(n, p, derive_seed(41, {n, k}));
      const auto edges = test::pairs_of(g);
      const auto mine = iso_exact(g);
      const auto ref = oracle::isoperimetric(n, edges);
      ASSERT_EQ(mine.ratio, (Ratio{ref.num, ref.den})) << "n=" << n << " k=" << k;
      ASSERT_EQ(mine.boundary, oracle::cut_edges(edges, test::mask_of(mine.witness)));
      ASSERT_LE(mine.ratio, (Ratio{min_degree(g), 1}));
      ASSERT_EQ((mine.ratio == Ratio{0, 1}), !oracle::connected(n, edges));
    }
  }
}

// The returned witness is the first minimizer in (size, ascending member list) order.
TEST(IsoExact, WitnessIsSmallestMinimizer) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Vertex n = 4 + k % 6;
    const Graph g = sample_gnp(n, 0.5, derive_seed(42, {k}));
    std::vector<VertexSet> minimizers;
    for (auto mask : oracle::minimizing_masks(n, test::pairs_of(g))) minimizers.push_back(test::set_of_mask(n, mask));
    const auto best = *std::min_element(minimizers.begin(), minimizers.end(), size_lex_less);
    EXPECT_EQ(iso_exact(g).witness, best);
  }
}

TEST(IsoExact, PruningNeverChangesTheAnswer) {
  SolverConfig plain;
  plain.prune = false;
  for (std::uint64_t k = 0; k < 80; ++k) {
    const Vertex n = 6 + k % 11;
    const Graph g = sample_gnp(n, 0.2 + 0.1 * (k % 7), derive_seed(43, {k}));
    const auto a = iso_exact(g), b = iso_exact(g, plain);
    ASSERT_EQ(a.ratio, b.ratio);
    ASSERT_EQ(a.witness, b.witness);
    const auto all_a = iso_exact_all_witnesses(g), all_b = iso_exact_all_witnesses(g, plain);
    ASSERT_EQ(all_a.size(), all_b.size());
    for (std::size_t i = 0; i < all_a.size(); ++i) ASSERT_EQ(all_a[i].witness, all_b[i].witness);
  }
}

TEST(AllWitnesses, StarOnFiveVertices) {
  const auto all = iso_exact_all_witnesses(star_graph(5));
  // Nonempty leaf subsets of size <= 2: 4 singletons and 6 pairs.
  ASSERT_EQ(all.size(), 10u);
  for (const auto& w : all) {
    EXPECT_EQ(w.ratio, (Ratio{1, 1}));
    EXPECT_FALSE(w.witness.contains(0));
    EXPECT_EQ(w.witness_kind, WitnessKind::IndependentMinDegree);
  }
  EXPECT_EQ(all.front().witness, VertexSet(5, {1}));
  EXPECT_EQ(all.back().witness, VertexSet(5, {3, 4}));
}

TEST(AllWitnesses, CompleteGraphPairsAreOther) {
  const auto all = iso_exact_all_witnesses(complete_graph(4));
  // Each of the 3 bisections once, listed by the side holding vertex 0.
  ASSERT_EQ(all.size(), 3u);
  for (const auto& w : all) {
    EXPECT_EQ(w.witness.size(), 2u);
    EXPECT_TRUE(w.witness.contains(0));
    EXPECT_EQ(w.witness_kind, WitnessKind::Other);
  }
}

TEST(AllWitnesses, EdgelessGraphEverySmallSet) {
  const auto all = iso_exact_all_witnesses(Graph(4));
  // 4 singletons plus the 3 bisections.
  EXPECT_EQ(all.size(), 7u);
  for (const auto& w : all) EXPECT_EQ(w.ratio, (Ratio{0, 1}));
}

TEST(AllWitnesses, MatchOracleUpToComplementOfBisections) {
  for (std::uint64_t k = 0; k < 150; ++k) {
    const Vertex n = 4 + k % 6;
    const Graph g = sample_gnp(n, 0.5, derive_seed(44, {k}));
    std::vector<VertexSet> expected;
    for (auto mask : oracle::minimizing_masks(n, test::pairs_of(g))) {
      const bool half = 2 * std::popcount(mask) == static_cast<int>(n);
      if (half && !(mask & 1u)) continue;
      expected.push_back(test::set_of_mask(n, mask));
    }
    std::sort(expected.begin(), expected.end(), size_lex_less);
    const auto all = iso_exact_all_witnesses(g);
    ASSERT_EQ(all.size(), expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      ASSERT_EQ(all[i].witness, expected[i]);
      ASSERT_EQ(all[i].witness_kind, classify_witness(g, expected[i]));
    }
  }
}

TEST(Classify, IndependentMinDegree) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(classify_witness(c6, VertexSet(6, {0, 2})), WitnessKind::IndependentMinDegree);
  EXPECT_EQ(classify_witness(c6, VertexSet(6, {0, 1})), WitnessKind::Other);
  const Graph star = star_graph(5);
  EXPECT_EQ(classify_witness(star, VertexSet(5, {0})), WitnessKind::Other);
}

TEST(CutReport, ValidatesSize) {
  EXPECT_THROW(make_cut_report(cycle_graph(5), VertexSet(5, {0, 1, 2})), DomainError);
  EXPECT_THROW(make_cut_report(cycle_graph(5), VertexSet(5)), DomainError);
  const auto r = make_cut_report(cycle_graph(5), VertexSet(5, {0, 1}));
  EXPECT_EQ(r.boundary, 2u);
  EXPECT_EQ(r.ratio, (Ratio{2, 2}));
}

TEST(FindBadSet, Examples) {
  EXPECT_FALSE(find_bad_set(complete_graph(4), 2).has_value());
  const Graph isolated = Graph::from_edges(5, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{2, 3}});
  const auto single = find_bad_set(isolated, 1);
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(*single, VertexSet(5, {4}));
  const auto half = find_bad_set(cycle_graph(6), 2);
  ASSERT_TRUE(half.has_value());
  EXPECT_LT(boundary_size(cycle_graph(6), *half), 2 * half->size());
  EXPECT_THROW(find_bad_set(cycle_graph(6), 0), DomainError);
}

TEST(FindBadSet, ExactBelowCapIffRatioBelowD) {
  SolverConfig cfg;
  cfg.bisection_samples = 50;
  for (std::uint64_t k = 0; k < 120; ++k) {
    const Vertex n = 5 + k % 10;
    const Graph g = sample_gnp(n, 0.5, derive_seed(45, {k}));
    const std::uint32_t d = 1 + k % 4;
    cfg.seed = k;
    const auto bad = find_bad_set(g, d, cfg);
    ASSERT_EQ(bad.has_value(), (iso_exact(g).ratio < Ratio{d, 1}));
    if (bad) {
      ASSERT_LE(2 * bad->size(), n);
      ASSERT_LT(boundary_size(g, *bad), d * bad->size());
    }
  }
}

// Above the exact cap the heuristic phases alone must find planted sparse cuts.
TEST(FindBadSet, HeuristicsFindPlantedCuts) {
  SolverConfig cfg;
  cfg.exact_cap = 8;
  cfg.bisection_samples = 200;
  // Two dense halves joined by a single edge: the half is bad for d = 2.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) edges.push_back({u, v});
  for (Vertex u = 10; u < 20; ++u)
    for (Vertex v = u + 1; v < 20; ++v) edges.push_back({u, v});
  edges.push_back({0, 10});
  const Graph barbell = Graph::from_edges(20, edges);
  const auto bad = find_bad_set(barbell, 2, cfg);
  ASSERT_TRUE(bad.has_value());
  EXPECT_LT(boundary_size(barbell, *bad), 2 * bad->size());
  EXPECT_FALSE(find_bad_set(complete_graph(20), 9, cfg).has_value());
}

TEST(BisectionSampler, Examples) {
  for (Vertex n : {5u, 8u}) {
    const auto r = sample_bisection_max_ratio(complete_graph(n), 20, 1);
    EXPECT_EQ(r.ratio, (Ratio{(n + 1) / 2, 1}));
    EXPECT_EQ(r.witness.size(), n / 2);
  }
  EXPECT_EQ(sample_bisection_max_ratio(Graph(6), 10, 1).ratio, (Ratio{0, 1}));
  EXPECT_THROW(sample_bisection_max_ratio(cycle_graph(4), 0, 1), DomainError);
}

TEST(BisectionSampler, CycleOfFourFindsOppositePair) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    if (sample_bisection_max_ratio(cycle_graph(4), 3, seed).ratio == Ratio{2, 1}) ++found;
  }
  // Success probability 1 - (2/3)^3 = 19/27 per run; 200 runs, mean 140.7, sd 6.5.
  EXPECT_NEAR(found, 200.0 * 19 / 27, 5 * 6.5);
}

TEST(BisectionSampler, NeverExceedsTrueMaximum) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const Vertex n = 8;
    const Graph g = sample_gnp(n, 0.5, derive_seed(46, {k}));
    const auto edges = test::pairs_of(g);
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == 4) best = std::max(best, oracle::cut_edges(edges, mask));
    const auto r = sample_bisection_max_ratio(g, 500, k);
    EXPECT_EQ(r.ratio, (Ratio{best, 4}));  // 70 sets, 500 draws: maximum is found
    EXPECT_EQ(r.boundary, boundary_size(g, r.witness));
  }
}

// i = δ at every time up to τ(δ = d_max) is decided by the hitting times alone.
TEST(ProcessReduction, HittingTimeChecksEqualEveryTimeChecks) {
  int disagreements = 0, successes = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 9;
    const auto trace = sample_trace(n, seed);
    const auto tau = hitting_times(trace, 3);
    bool every_t = true;
    for (std::uint64_t t = 0; t <= tau.at(3); ++t) {
      const Graph g = graph_at(trace, t);
      every_t = every_t && iso_exact(g).ratio == Ratio{min_degree(g), 1};
    }
    bool at_tau = true;
    for (std::uint32_t d = 1; d <= 3; ++d) {
      const Graph g = graph_at(trace, tau.at(d));
      at_tau = at_tau && iso_exact(g).ratio == Ratio{min_degree(g), 1};
    }
    disagreements += every_t != at_tau;
    successes += every_t;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(successes, 0);
}

}  // namespace
}  // namespace isolab
