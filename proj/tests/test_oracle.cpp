#include <gtest/gtest.h>

#include <intervalfpt/generators.hpp>
#include <intervalfpt/oracle.hpp>
#include <intervalfpt/recognition.hpp>

#include "support.hpp"

using namespace ifpt;

TEST(Oracle, RefusesLargeGraphs) {
    EXPECT_THROW(oracle_is_interval(Graph(11)), WorkBoundExceeded);
    EXPECT_NO_THROW(oracle_is_interval(Graph(10)));
}

TEST(Oracle, SmallKnownAnswers) {
    EXPECT_TRUE(oracle_is_interval(make_path(6)));
    EXPECT_FALSE(oracle_is_interval(make_cycle(4)));
    EXPECT_FALSE(oracle_is_interval(make_gadget(ATKind::Type1, 2).graph));
    EXPECT_FALSE(oracle_is_interval(make_gadget(ATKind::Type2, 1).graph));
    EXPECT_TRUE(oracle_is_interval(Graph(0)));
}

TEST(Oracle, FiveCycleNeedsTwoFillEdges) {
    auto r = brute_force_min_completion(make_cycle(5), 4);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size, 2u);
    EXPECT_TRUE(is_interval(add_edges(make_cycle(5), r->witness)));
}

TEST(Oracle, SquareNeedsOneDeletion) {
    auto r = brute_force_min_deletion(make_cycle(4), 4);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size, 1u);
    EXPECT_EQ(r->witness, (VertexSet{0}));
}

TEST(Oracle, BudgetTooSmallGivesNothing) {
    EXPECT_FALSE(brute_force_min_completion(make_cycle(6), 2));
    EXPECT_FALSE(brute_force_min_deletion(disjoint_union(make_cycle(4), make_cycle(4)), 1));
}

TEST(Oracle, WorkBoundIsEnforced) {
    Rng rng(1);
    Graph g = make_gnp(14, 0.2, rng);
    EXPECT_THROW(brute_force_min_completion(g, 6, OracleLimits{10, 1000}), WorkBoundExceeded);
}

// Every minimum answer is no larger than any other valid answer of the
// same kind found by random sampling.
TEST(Oracle, DeletionOptimumIsMinimal) {
    Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = make_gnp(8, 0.4, rng);
        auto r = brute_force_min_deletion(g, 8);
        ASSERT_TRUE(r);
        EXPECT_TRUE(is_interval(remove_vertices(g, r->witness)));
        if (r->size > 0) {
            detail::for_each_combination(g.order(), r->size - 1, [&](const std::vector<std::size_t>& pick) {
                VertexSet s;
                for (auto i : pick) s.insert(g.id(i));
                EXPECT_FALSE(is_interval(remove_vertices(g, s)));
                return false;
            });
        }
    }
}

TEST(Oracle, NonisomorphicCountsUpToSix) {
    std::vector<std::size_t> want{1, 1, 2, 4, 11, 34, 156};
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(brute::nonisomorphic_graphs(n).size(), want[n]) << n;
}
