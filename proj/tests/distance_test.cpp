#include <gtest/gtest.h>

#include <random>

#include "edgedist/comparability.hpp"
#include "edgedist/distance.hpp"
#include "edgedist/oracle.hpp"
#include "test_support.hpp"

namespace edgedist {
namespace {

const ComparabilityBackend kBackend;

DistanceReport report(const Graph& g, std::size_t k_max = 8) {
  auto r = find_distance(g, kBackend, k_max);
  EXPECT_TRUE(std::holds_alternative<DistanceReport>(r));
  return std::get<DistanceReport>(r);
}

TEST(FindDistance, ComparabilityGraphsAreAtZero) {
  auto r = report(cycle_graph(6));
  EXPECT_EQ(r.xi, 0U);
  EXPECT_TRUE(r.witness.pairs.empty());
  EXPECT_EQ(r.witness.mode, EditMode::Apex);
}

TEST(FindDistance, FiveCycle) {
  auto r = report(cycle_graph(5));
  EXPECT_EQ(r.xi, 1U);
  EXPECT_EQ(r.witness, (DistantEdgeSet{EditMode::Apex, {{0, 1}}}));
  EXPECT_TRUE(r.explored_both_sides);
}

TEST(FindDistance, FewEdgesOrFewNonEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(2 + rng() % 9, 0.5, rng);
    if (std::min(g.edge_count(), g.non_edge_count()) > 4) continue;
    EXPECT_EQ(report(g).xi, 0U);
  }
}

TEST(FindDistance, BudgetExceeded) {
  auto g = disjoint_union(cycle_graph(5), cycle_graph(5));
  auto r = find_distance(g, kBackend, 1);
  ASSERT_TRUE(std::holds_alternative<ExceedsKMax>(r));
  EXPECT_EQ(std::get<ExceedsKMax>(r).k_max, 1U);
  EXPECT_GT(std::get<ExceedsKMax>(r).memberships_tested, 0U);
  EXPECT_EQ(report(g, 2).xi, 2U);
}

TEST(ValidateSet, Examples) {
  auto c5 = cycle_graph(5);
  EXPECT_TRUE(validate_set(c5, {EditMode::Apex, {{0, 1}}}, kBackend));
  EXPECT_FALSE(validate_set(c5, {EditMode::Apex, {}}, kBackend));
  EXPECT_FALSE(validate_set(complete_graph(3), {EditMode::Apex, {{0, 4}}}, kBackend));
  EXPECT_FALSE(validate_set(c5, {EditMode::Add, {{0, 1}}}, kBackend));
  EXPECT_TRUE(validate_set(c5, {EditMode::Add, {{0, 2}}}, kBackend));
}

TEST(DistanceProperties, MinimalValidAndMonotone) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testing::random_graph(3 + rng() % 6, 0.1 * static_cast<double>(2 + rng() % 7), rng);
    auto r = report(g);
    EXPECT_EQ(r.xi, oracle::brute_distance(g, kBackend));
    EXPECT_EQ(r.witness.k(), r.xi);
    EXPECT_TRUE(validate_set(g, r.witness, kBackend));
    EXPECT_LE(r.xi, kBackend.distance_upper_bound(g).value());
    // Each prefix leaves a graph at distance at most the remaining pairs.
    for (std::size_t i = 0; i <= r.xi; ++i) {
      DistantEdgeSet prefix{r.witness.mode, {r.witness.pairs.begin(), r.witness.pairs.begin() + i}};
      auto rest = report(apply(g, prefix));
      EXPECT_LE(rest.xi, r.xi - i);
    }
  }
}

}  // namespace
}  // namespace edgedist
