#include <gtest/gtest.h>

#include "edgedist/min_flow.hpp"

namespace edgedist {
namespace {

TEST(LowerBoundFlow, SingleArcNeedsItsLowerBound) {
  LowerBoundFlow net(2);
  auto a = net.add_arc(0, 1, 5, 9);
  EXPECT_EQ(net.min_flow(0, 1), 5);
  EXPECT_EQ(net.flow(a), 5);
}

TEST(LowerBoundFlow, ParallelDemandsAdd) {
  // s -> a -> t and s -> b -> t with independent lower bounds.
  LowerBoundFlow net(4);
  net.add_arc(0, 1, 0, LowerBoundFlow::kInfinite);
  net.add_arc(1, 3, 3, LowerBoundFlow::kInfinite);
  net.add_arc(0, 2, 0, LowerBoundFlow::kInfinite);
  net.add_arc(2, 3, 4, LowerBoundFlow::kInfinite);
  EXPECT_EQ(net.min_flow(0, 3), 7);
}

TEST(LowerBoundFlow, SeriesDemandsShareFlow) {
  // s -> a -> b -> t: one stream covers both demands.
  LowerBoundFlow net(4);
  net.add_arc(0, 1, 0, LowerBoundFlow::kInfinite);
  net.add_arc(1, 2, 3, LowerBoundFlow::kInfinite);
  net.add_arc(2, 3, 4, LowerBoundFlow::kInfinite);
  EXPECT_EQ(net.min_flow(0, 3), 4);
}

TEST(LowerBoundFlow, InfeasibleWhenCapacityBelowDemand) {
  LowerBoundFlow net(3);
  net.add_arc(0, 1, 0, 2);
  net.add_arc(1, 2, 5, 10);
  EXPECT_FALSE(net.min_flow(0, 2).has_value());
}

TEST(LowerBoundFlow, ResidualCutSeparatesSinkFromSource) {
  LowerBoundFlow net(4);
  net.add_arc(0, 1, 0, LowerBoundFlow::kInfinite);
  net.add_arc(1, 2, 2, LowerBoundFlow::kInfinite);
  net.add_arc(2, 3, 0, LowerBoundFlow::kInfinite);
  ASSERT_EQ(net.min_flow(0, 3), 2);
  auto reach = net.residual_reachable(3);
  EXPECT_TRUE(reach[3]);
  EXPECT_FALSE(reach[0]);
}

TEST(LowerBoundFlow, RejectsBadArcs) {
  LowerBoundFlow net(2);
  EXPECT_THROW(net.add_arc(0, 2, 0, 1), std::out_of_range);
  EXPECT_THROW(net.add_arc(0, 1, 3, 2), std::invalid_argument);
}

}  // namespace
}  // namespace edgedist
