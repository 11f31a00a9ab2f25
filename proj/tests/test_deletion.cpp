#include <gtest/gtest.h>

#include <intervalfpt/deletion.hpp>
#include <intervalfpt/generators.hpp>
#include <intervalfpt/oracle.hpp>

#include "support.hpp"

using namespace ifpt;

namespace {

void expect_sound(const Graph& g, int k, const DeletionResult& r) {
    ASSERT_TRUE(r.yes());
    EXPECT_LE(r.solution->size(), static_cast<std::size_t>(k));
    Graph rest = remove_vertices(g, *r.solution);
    EXPECT_TRUE(is_interval(rest));
    if (rest.order() <= 10) {
        EXPECT_TRUE(oracle_is_interval(rest));
    }
}

int solver_optimum(const Graph& g, int kmax) {
    auto [k, r] = optimize_deletion(g, kmax);
    return r.yes() ? k : -1;
}

}  // namespace

TEST(Deletion, IntervalGraphNeedsNothing) {
    auto r = interval_deletion(make_path(5), 0);
    ASSERT_TRUE(r.yes());
    EXPECT_TRUE(r.solution->empty());
}

TEST(Deletion, Cycles) {
    expect_sound(make_cycle(4), 1, interval_deletion(make_cycle(4), 1));
    expect_sound(make_cycle(9), 1, interval_deletion(make_cycle(9), 1));
    EXPECT_FALSE(interval_deletion(make_cycle(9), 0).yes());
    Graph two = disjoint_union(make_cycle(4), make_cycle(4));
    EXPECT_FALSE(interval_deletion(two, 1).yes());
    expect_sound(two, 2, interval_deletion(two, 2));
}

TEST(Deletion, BareGadgets) {
    for (auto kind : {ATKind::Type1, ATKind::Type2}) {
        for (std::size_t p : {7, 10, 14}) {
            auto gad = make_gadget(kind, p);
            EXPECT_FALSE(interval_deletion(gad.graph, 0).yes());
            auto r = interval_deletion(gad.graph, 1);
            expect_sound(gad.graph, 1, r);
            EXPECT_GE(r.stats.degree(NodeKind::BigAT), 1U);
        }
    }
}

TEST(Deletion, GadgetOptimumMatchesOracle) {
    auto gad = make_gadget(ATKind::Type1, 7);
    auto opt = brute_force_min_deletion(gad.graph, 3);
    ASSERT_TRUE(opt);
    EXPECT_EQ(opt->size, 1U);
    EXPECT_EQ(solver_optimum(gad.graph, 3), 1);
}

TEST(Deletion, ChordalRoutineChecksItsInput) {
    EXPECT_THROW(chordal_interval(make_cycle(9), 1), StructureViolation);
    Graph claw = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    EXPECT_THROW(chordal_interval(claw, 1), StructureViolation);
    auto gad = make_gadget(ATKind::Type2, 9);
    expect_sound(gad.graph, 1, chordal_interval(gad.graph, 1));
    EXPECT_THROW(interval_deletion(claw, -1), ContractViolation);
}

TEST(Deletion, NestedGadgetsAreSolved) {
    auto nested = make_nested_gadget(3, 7);
    auto [k, r] = optimize_deletion(nested.graph, 4);
    ASSERT_TRUE(r.yes());
    expect_sound(nested.graph, k, r);
    EXPECT_LE(k, 3);
}

TEST(Deletion, SmallObstructionDegreeIsBounded) {
    Rng rng(3);
    for (int round = 0; round < 100; ++round) {
        Graph g = make_gnp(9, 0.35, rng);
        auto [k, r] = optimize_deletion(g, 9);
        ASSERT_TRUE(r.yes());
        EXPECT_LE(r.stats.degree(NodeKind::SmallObstruction), small_at_bound);
    }
}

TEST(Deletion, AgreesWithOracleOnAllSmallGraphs) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : brute::nonisomorphic_graphs(n)) {
            auto opt = brute_force_min_deletion(g, n);
            ASSERT_TRUE(opt);
            EXPECT_EQ(solver_optimum(g, static_cast<int>(n)), static_cast<int>(opt->size));
        }
}

TEST(Deletion, AgreesWithOracleOnRandomGraphs) {
    Rng rng(21);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(7, 10)(rng);
        Graph g = round % 2 ? make_gnp(n, 0.3, rng) : make_random_chordal(n, rng);
        auto opt = brute_force_min_deletion(g, 4);
        if (!opt) continue;
        EXPECT_EQ(solver_optimum(g, 4), static_cast<int>(opt->size)) << round;
    }
}

TEST(Deletion, SoundAndMonotone) {
    Rng rng(8);
    for (int round = 0; round < 80; ++round) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(8, 16)(rng);
        Graph g = make_gnp(n, 0.25, rng);
        bool seen_yes = false;
        for (int k = 0; k <= 4; ++k) {
            auto r = interval_deletion(g, k);
            if (seen_yes) {
                EXPECT_TRUE(r.yes()) << round << " k=" << k;
            }
            if (r.yes()) {
                expect_sound(g, k, r);
                EXPECT_LE(r.stats.max_depth, static_cast<std::size_t>(k));
                seen_yes = true;
            }
        }
    }
}

TEST(Deletion, MemoDoesNotChangeAnswers) {
    Rng rng(12);
    for (int round = 0; round < 40; ++round) {
        Graph g = make_gnp(11, 0.3, rng);
        for (int k = 1; k <= 3; ++k) {
            auto with = interval_deletion(g, k, {true, false});
            auto without = interval_deletion(g, k, {false, false});
            EXPECT_EQ(with.solution, without.solution);
        }
    }
}

TEST(Deletion, ParallelRootMatchesSequential) {
    Rng rng(4);
    for (int round = 0; round < 30; ++round) {
        Graph g = make_gnp(12, 0.3, rng);
        for (int k = 1; k <= 3; ++k) {
            auto seq = interval_deletion(g, k, {true, false});
            auto par = interval_deletion(g, k, {true, true});
            EXPECT_EQ(seq.solution, par.solution) << round << " k=" << k;
        }
    }
}

TEST(Deletion, GadgetInChordalHost) {
    Rng rng(30);
    auto gad = make_gadget(ATKind::Type1, 16);
    Graph host = make_random_interval(20, 30, 4, rng);
    Graph g = disjoint_union(gad.graph, host);
    auto r = interval_deletion(g, 2);
    expect_sound(g, 2, r);
}

TEST(Deletion, TemplateBesideCleanCycle) {
    // every template vertex sees v0: the cycle is clean, but an AT sits next to it
    for (std::size_t len : {9, 12}) {
        for (auto kind : {ATKind::Type1, ATKind::Type2}) {
            auto gad = make_gadget(kind, 7);
            Graph g = disjoint_union(make_cycle(len), gad.graph);
            for (auto v : g.ids())
                if (v >= len) g.add_edge(0, v);
            ASSERT_FALSE(find_small_obstruction(g));
            EXPECT_FALSE(interval_deletion(g, 1).yes());
            auto r = interval_deletion(g, 2);
            expect_sound(g, 2, r);
            EXPECT_EQ(r.stats.branch_nodes[static_cast<std::size_t>(NodeKind::CycleLocal)], 1U);
            auto opt = brute_force_min_deletion(g, 2);
            ASSERT_TRUE(opt);
            EXPECT_EQ(opt->size, 2U);
        }
    }
}
