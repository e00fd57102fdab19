#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "kplex/bounds.hpp"
#include "kplex/oracle.hpp"
#include "support.hpp"

namespace kt = kplex::testing;
using kplex::DenseGraph;
using kplex::PivotRatio;
using kplex::VertexSet;

TEST(PivotRatio, Ordering) {
    EXPECT_TRUE(PivotRatio::make(3, 2) > PivotRatio::make(4, 3));
    EXPECT_FALSE(PivotRatio::make(2, 4) > PivotRatio::make(1, 2));
    EXPECT_TRUE(PivotRatio::make(1, 0) > PivotRatio::make(100, 1));
    EXPECT_FALSE(PivotRatio::make(1, 0) > PivotRatio::make(2, 0));
    EXPECT_FALSE(PivotRatio::make(0, 0).infinite());
    EXPECT_FALSE(PivotRatio::make(0, 0).exceeds_one());
    EXPECT_TRUE(PivotRatio::make(3, 0).exceeds_one());
    EXPECT_FALSE(PivotRatio::make(2, 2).exceeds_one());
}

TEST(ComputeUB, NoPivotsMeansEverythingCounts) {
    const auto g = DenseGraph::from_graph(kt::cycle(6));
    const auto c = VertexSet::of(6, std::vector<int>{1, 2, 3});
    EXPECT_EQ(kplex::compute_ub(g, g.empty_set(), g.empty_set(), c, 2), 3);
}

TEST(ComputeUB, NoCandidates) {
    const auto g = DenseGraph::from_graph(kt::cycle(6));
    const auto s = VertexSet::of(6, std::vector<int>{0});
    EXPECT_EQ(kplex::compute_ub(g, s, s, g.empty_set(), 2), 0);
}

TEST(ComputeUB, PartitionCoversCandidates) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + trial % 3;
        const auto g = DenseGraph::from_graph(kt::erdos_renyi(16, 0.5, rng));
        auto [s, c] = kt::random_branch(g, k, rng);
        const auto p = kplex::compute_ub_partition(g, s, s, c, k);
        VertexSet covered = p.rest;
        int bound = p.rest.count();
        for (std::size_t i = 0; i < p.pivots.size(); ++i) {
            EXPECT_FALSE(covered.intersects(p.buckets[i]));
            EXPECT_FALSE(p.buckets[i].intersects(g.row(p.pivots[i])));
            covered |= p.buckets[i];
            bound += std::min(p.buckets[i].count(), p.caps[i]);
        }
        EXPECT_EQ(covered, c);
        EXPECT_EQ(bound, p.bound);
        EXPECT_EQ(p.bound, kplex::compute_ub(g, s, s, c, k));
        EXPECT_EQ(static_cast<int>(p.pivots.size()), s.count());
    }
}

TEST(ComputeUB, SoundAgainstEnumeration) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 2 + trial % 3;
        const auto g = DenseGraph::from_graph(kt::erdos_renyi(14, 0.3 + 0.2 * (trial % 3), rng));
        auto [s, c] = kt::random_branch(g, k, rng);
        int best = 0;
        for (const auto& h : kplex::enumerate_branch_kplexes(g, s, c, k, 0)) best = std::max(best, h.intersect_count(c));
        EXPECT_GE(kplex::compute_ub(g, s, s, c, k), best);
    }
}

TEST(GreedyPartition, EmptyS) {
    const auto g = DenseGraph::from_graph(kt::cycle(5));
    const auto c = VertexSet::full(5);
    const auto pb = kplex::greedy_partition(g, g.empty_set(), c, 2);
    EXPECT_TRUE(pb.s_left.empty());
    EXPECT_TRUE(pb.s_right.empty());
    EXPECT_TRUE(pb.c_left.empty());
    EXPECT_EQ(pb.c_right, c);
}

TEST(GreedyPartition, FullyAdjacentPivotGoesRight) {
    const auto g = DenseGraph::from_graph(kt::star(4));
    const auto s = VertexSet::of(5, std::vector<int>{0});
    const auto c = VertexSet::of(5, std::vector<int>{1, 2, 3, 4});
    const auto pb = kplex::greedy_partition(g, s, c, 2);
    EXPECT_TRUE(pb.c_left.empty());
    EXPECT_EQ(pb.c_right, c);
    EXPECT_EQ(pb.s_right, s);
}

TEST(GreedyPartition, InvariantsAndRightSideCollapse) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const int k = 2 + trial % 3;
        const auto g = DenseGraph::from_graph(kt::erdos_renyi(18, 0.3 + 0.2 * (trial % 3), rng));
        auto [s, c] = kt::random_branch(g, k, rng);
        const auto pb = kplex::greedy_partition(g, s, c, k);
        EXPECT_EQ(pb.s_left | pb.s_right, s);
        EXPECT_FALSE(pb.s_left.intersects(pb.s_right));
        EXPECT_EQ(pb.c_left | pb.c_right, c);
        EXPECT_FALSE(pb.c_left.intersects(pb.c_right));
        EXPECT_EQ(kplex::compute_ub(g, s, pb.s_right, pb.c_right, k), pb.c_right.count());
        pb.s_left.for_each([&](int u) { EXPECT_FALSE(pb.c_right.intersects(c - g.row(u))); });
    }
}
