#include "oafd/maxflow.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oafd/families.hpp"
#include "oafd/leximin.hpp"

namespace oafd {
namespace {

using testing::enumerate_cuts;
using testing::Q;

TEST(MaxFlowTest, SingleEdge) {
  FlowNetwork net(2, 0, 1);
  net.add_edge(0, 1, Q(5));
  const Flow flow = max_flow(net);
  EXPECT_EQ(flow.value, Q(5));
  const CutResult cut = min_cut(net, flow);
  EXPECT_TRUE(cut.contains(0));
  EXPECT_FALSE(cut.contains(1));
  EXPECT_EQ(cut.capacity, Q(5));
}

TEST(MaxFlowTest, ParallelPaths) {
  FlowNetwork net(4, 0, 3);
  net.add_edge(0, 1, Q(3));
  net.add_edge(1, 3, Q(1));
  net.add_edge(0, 2, Q(2));
  net.add_edge(2, 3, Q(4));
  const Flow flow = max_flow(net);
  EXPECT_EQ(flow.value, Q(3));
  EXPECT_TRUE(is_valid_flow(net, flow));
}

TEST(MaxFlowTest, UnboundedNetworkOfSiLimitFamily) {
  const Instance instance = si_limit_instance(2);
  const auto caps = unbounded_source_caps(instance);
  const BuiltNetwork built = build_network(instance, caps);
  EXPECT_EQ(built.network.num_vertices(), 6u);
  const Flow flow = max_flow(built.network);
  EXPECT_EQ(flow.value, Q(3));
  EXPECT_EQ(enumerate_cuts(built.network).min_capacity, Q(3));
}

TEST(MinCutTest, BottleneckAtSink) {
  FlowNetwork net(3, 0, 2);
  net.add_edge(0, 1, Q(10));
  net.add_edge(1, 2, Q(1));
  const CutResult cut = min_cut(net, max_flow(net));
  EXPECT_TRUE(cut.contains(1));
  EXPECT_EQ(cut.capacity, Q(1));
}

TEST(MinCutTest, ThreeAgentNetworkAtLambdaThree) {
  const Instance instance = mmf_si_manipulation_instance();
  const std::vector<Rational> caps(3, Q(3));
  const BuiltNetwork built = build_network(instance, caps);
  const Flow flow = max_flow(built.network);
  EXPECT_EQ(min_cut(built.network, flow).capacity, Q(9));
  EXPECT_EQ(enumerate_cuts(built.network).min_capacity, Q(9));
}

TEST(MinCutTest, RejectsNonMaximumFlow) {
  FlowNetwork net(2, 0, 1);
  net.add_edge(0, 1, Q(5));
  Flow half{{Q(2)}, Q(2)};
  EXPECT_THROW(min_cut(net, half), std::invalid_argument);
  EXPECT_THROW(source_heavy_min_cut(net, half), std::invalid_argument);
}

TEST(SourceHeavyCutTest, PrefersLargestSourceSide) {
  FlowNetwork net(3, 0, 2);
  net.add_edge(0, 1, Q(1));
  net.add_edge(1, 2, Q(1));
  const Flow flow = max_flow(net);
  EXPECT_FALSE(min_cut(net, flow).contains(1));
  const CutResult heavy = source_heavy_min_cut(net, flow);
  EXPECT_TRUE(heavy.contains(1));
  EXPECT_EQ(heavy.capacity, Q(1));
}

TEST(SourceHeavyCutTest, UniqueMinCutAgreesWithMinCut) {
  FlowNetwork net(4, 0, 3);
  net.add_edge(0, 1, Q(1));
  net.add_edge(1, 2, Q(5));
  net.add_edge(2, 3, Q(2));
  const Flow flow = max_flow(net);
  EXPECT_EQ(min_cut(net, flow).source_side, source_heavy_min_cut(net, flow).source_side);
}

TEST(SourceHeavyCutTest, TwoTierNetworkAtLambdaOne) {
  const Instance instance = testing::two_tier_instance();
  const std::vector<Rational> caps{Q(1), Q(1)};
  const BuiltNetwork built = build_network(instance, caps);
  const CutResult heavy = source_heavy_min_cut(built.network, max_flow(built.network));
  EXPECT_TRUE(heavy.contains(built.layout.agent(0)));
  EXPECT_FALSE(heavy.contains(built.layout.agent(1)));
  const auto brute = enumerate_cuts(built.network);
  EXPECT_EQ(heavy.source_side, brute.union_of_min_sides);
  EXPECT_EQ(heavy.capacity, brute.min_capacity);
}

// Random graphs up to 10 vertices, compared with full cut enumeration.
TEST(MaxFlowPropertyTest, AgreesWithCutEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    FlowNetwork net(n, 0, n - 1);
    const std::size_t edges = rng() % (3 * n);
    for (std::size_t i = 0; i < edges; ++i) {
      const VertexIndex u = rng() % n;
      const VertexIndex v = rng() % n;
      if (u == v || v == 0 || u == n - 1) continue;
      net.add_edge(u, v, make_rational(static_cast<long>(rng() % 13), 1 + static_cast<long>(rng() % 4)));
    }
    const Flow flow = max_flow(net);
    ASSERT_TRUE(is_valid_flow(net, flow));
    const auto brute = enumerate_cuts(net);
    EXPECT_EQ(flow.value, brute.min_capacity);
    const CutResult small = min_cut(net, flow);
    const CutResult heavy = source_heavy_min_cut(net, flow);
    EXPECT_EQ(small.capacity, flow.value);
    EXPECT_EQ(heavy.capacity, flow.value);
    EXPECT_EQ(heavy.source_side, brute.union_of_min_sides);
    for (std::size_t v = 0; v < n; ++v) {
      if (small.contains(v)) EXPECT_TRUE(heavy.contains(v));
    }
    EXPECT_EQ(max_flow(net).edge_flow, flow.edge_flow);
  }
}

TEST(FlowNetworkTest, RejectsBadEdges) {
  FlowNetwork net(3, 0, 2);
  EXPECT_THROW(net.add_edge(0, 3, Q(1)), std::invalid_argument);
  EXPECT_THROW(net.add_edge(0, 1, Q(-1)), std::invalid_argument);
  EXPECT_THROW(FlowNetwork(2, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace oafd
