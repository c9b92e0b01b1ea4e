#include <gtest/gtest.h>

#include <random>

#include "edgedist/comparability.hpp"
#include "edgedist/generator.hpp"
#include "edgedist/oracle.hpp"
#include "test_support.hpp"

namespace edgedist {
namespace {

using testing::make_graph;

TEST(Recognize, PathOrientation) {
  auto o = recognize_and_orient(path_graph(3));
  ASSERT_TRUE(o.has_value());
  std::vector<Arc> arcs(o->arcs().begin(), o->arcs().end());
  EXPECT_EQ(arcs, (std::vector<Arc>{{0, 1}, {2, 1}}));
}

TEST(Recognize, OddCycleRejected) {
  EXPECT_FALSE(recognize_and_orient(cycle_graph(5)).has_value());
  EXPECT_FALSE(recognize_and_orient(cycle_graph(7)).has_value());
  EXPECT_TRUE(recognize_and_orient(cycle_graph(6)).has_value());
}

TEST(Recognize, BipartiteAccepted) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t left = 1 + rng() % 6;
    const std::size_t right = 1 + rng() % 6;
    GraphBuilder b(left + right);
    for (Vertex u = 0; u < left; ++u) {
      for (Vertex v = 0; v < right; ++v) {
        if (rng() % 2) b.set_edge(u, static_cast<Vertex>(left + v), true);
      }
    }
    EXPECT_TRUE(recognize_and_orient(std::move(b).build()).has_value());
  }
}

TEST(Recognize, EmptyAndTinyGraphs) {
  EXPECT_TRUE(recognize_and_orient(Graph(0)).has_value());
  EXPECT_TRUE(recognize_and_orient(Graph(1)).has_value());
  EXPECT_TRUE(recognize_and_orient(complete_graph(6)).has_value());
}

TEST(VerifyOrientation, Examples) {
  auto p3 = path_graph(3);
  EXPECT_TRUE(verify_orientation(p3, TransitiveOrientation(3, {{0, 1}, {2, 1}})));
  EXPECT_FALSE(verify_orientation(p3, TransitiveOrientation(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(verify_orientation(complete_graph(3), TransitiveOrientation(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(VerifyOrientation, CycleIsNotAcyclic) {
  EXPECT_FALSE(verify_orientation(complete_graph(3), TransitiveOrientation(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(VerifyOrientation, CoverageErrors) {
  auto p3 = path_graph(3);
  EXPECT_THROW((void)verify_orientation(p3, TransitiveOrientation(3, {{0, 1}})), PreconditionError);
  EXPECT_THROW((void)verify_orientation(p3, TransitiveOrientation(3, {{0, 1}, {0, 2}})), PreconditionError);
  EXPECT_THROW((void)verify_orientation(p3, TransitiveOrientation(3, {{0, 1}, {1, 0}})), PreconditionError);
  EXPECT_THROW(TransitiveOrientation(3, {{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(TransitiveOrientation(3, {{2, 2}}), PreconditionError);
}

TEST(WmcComparability, Examples) {
  auto k3 = with_weights(complete_graph(3), {1, 2, 3});
  TransitiveOrientation total(3, {{0, 1}, {1, 2}, {0, 2}});
  auto s = wmc_comparability(k3, total);
  EXPECT_EQ(s.weight, 6);
  EXPECT_EQ(s.vertices, (std::vector<Vertex>{0, 1, 2}));

  auto e3 = with_weights(Graph(3), {4, 7, 2});
  auto t = wmc_comparability(e3, TransitiveOrientation(3, {}));
  EXPECT_EQ(t.vertices, (std::vector<Vertex>{1}));
  EXPECT_EQ(t.weight, 7);
}

TEST(WmcComparability, RejectsNonTransitivePathOrientation) {
  EXPECT_THROW((void)wmc_comparability(path_graph(3), TransitiveOrientation(3, {{0, 1}, {1, 2}})),
               PreconditionError);
  EXPECT_THROW((void)wmc_comparability(complete_graph(3), TransitiveOrientation(3, {{0, 1}, {1, 2}, {2, 0}})),
               PreconditionError);
}

TEST(WmisComparability, Examples) {
  auto k3 = with_weights(complete_graph(3), {1, 2, 3});
  auto s = wmis_comparability(k3, *recognize_and_orient(k3));
  EXPECT_EQ(s.vertices, (std::vector<Vertex>{2}));
  EXPECT_EQ(s.weight, 3);

  auto c4 = with_weights(cycle_graph(4), {1, 2, 3, 4});
  auto t = wmis_comparability(c4, *recognize_and_orient(c4));
  EXPECT_EQ(t.vertices, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(t.weight, 6);
}

TEST(WmisComparability, ZeroWeightsAndEmptyGraph) {
  EXPECT_EQ(wmis_comparability(Graph(0), TransitiveOrientation(0, {})).weight, 0);
  auto g = with_weights(path_graph(3), {0, 0, 0});
  EXPECT_EQ(wmis_comparability(g, *recognize_and_orient(g)).weight, 0);
}

TEST(WmisComparability, RejectsInvalidOrientation) {
  EXPECT_THROW((void)wmis_comparability(path_graph(3), TransitiveOrientation(3, {{0, 1}, {1, 2}})),
               PreconditionError);
}

TEST(TriviallyTransitive, Examples) {
  EXPECT_TRUE(trivially_transitive(path_graph(4)));
  EXPECT_FALSE(trivially_transitive(cycle_graph(5)));
  EXPECT_TRUE(trivially_transitive(complete_graph(5)));
}

TEST(OrientationDump, TopologicalBySource) {
  auto o = TransitiveOrientation(3, {{2, 1}, {2, 0}, {1, 0}});
  EXPECT_EQ(orientation_dump(o), "2 -> 1\n2 -> 0\n1 -> 0\n");
}

TEST(ComparabilityBackend, MembershipAndSolvers) {
  const ComparabilityBackend backend;
  EXPECT_FALSE(backend.contains(cycle_graph(5)));
  EXPECT_TRUE(backend.contains(testing::house()));
  EXPECT_THROW((void)backend.solve_wmc(cycle_graph(5)), CertificateError);
  EXPECT_EQ(backend.solve_wmis(testing::house()).weight, 2);
  EXPECT_EQ(backend.distance_upper_bound(cycle_graph(5)), 1u);
  EXPECT_EQ(backend.distance_upper_bound(path_graph(4)), 0u);
}

// Brute-force cross-checks on small graphs.
TEST(ComparabilityProperties, RecognizerMatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_graph(2 + rng() % 7, 0.45, rng);
    if (g.edge_count() > oracle::kMaxOrientationEdges) continue;
    auto o = recognize_and_orient(g);
    EXPECT_EQ(o.has_value(), oracle::brute_orientation_exists(g));
    if (o) {
      EXPECT_TRUE(verify_orientation(g, *o));
      EXPECT_TRUE(verify_orientation(g, o->reversed()));
    }
  }
}

TEST(ComparabilityProperties, HereditySpotCheck) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_comparability_graph(3 + rng() % 10, 0.5, 10, rng);
    ASSERT_TRUE(recognize_and_orient(g).has_value());
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (rng() % 2) keep.push_back(v);
    }
    EXPECT_TRUE(recognize_and_orient(induced_subgraph(g, keep).graph).has_value());
  }
}

TEST(ComparabilityProperties, SolversMatchOracleAndReversal) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_comparability_graph(1 + rng() % 8, 0.1 * static_cast<double>(rng() % 11), 100, rng);
    auto o = recognize_and_orient(g);
    ASSERT_TRUE(o.has_value());
    auto c = wmc_comparability(g, *o);
    auto i = wmis_comparability(g, *o);
    EXPECT_TRUE(is_certified(g, c));
    EXPECT_TRUE(is_certified(g, i));
    EXPECT_EQ(c.weight, oracle::brute_wmc(g).weight);
    EXPECT_EQ(i.weight, oracle::brute_wmis(g).weight);
    EXPECT_EQ(wmc_comparability(g, o->reversed()).weight, c.weight);
    EXPECT_EQ(wmis_comparability(g, o->reversed()).weight, i.weight);
  }
}

TEST(ComparabilityProperties, LargerGraphsStayConsistent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_comparability_graph(20 + rng() % 4, 0.3, 50, rng);
    auto o = recognize_and_orient(g);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(wmc_comparability(g, *o).weight, oracle::brute_wmc(g).weight);
    EXPECT_EQ(wmis_comparability(g, *o).weight, oracle::brute_wmis(g).weight);
  }
}

}  // namespace
}  // namespace edgedist
