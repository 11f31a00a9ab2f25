#include <gtest/gtest.h>

#include <intervalfpt/completion.hpp>
#include <intervalfpt/generators.hpp>
#include <intervalfpt/oracle.hpp>
#include <intervalfpt/properties.hpp>

#include "support.hpp"

using namespace ifpt;

namespace {

void expect_sound(const Graph& g, int k, const CompletionResult& r) {
    ASSERT_TRUE(r.yes());
    EXPECT_LE(r.solution->size(), static_cast<std::size_t>(k));
    for (const auto& e : *r.solution) EXPECT_FALSE(g.adjacent(e.u, e.v));
    Graph filled = add_edges(g, *r.solution);
    EXPECT_TRUE(is_interval(filled));
    if (filled.order() <= 10) {
        EXPECT_TRUE(oracle_is_interval(filled));
    }
}

int solver_optimum(const Graph& g, int kmax) {
    auto [k, r] = optimize_completion(g, kmax);
    return r.yes() ? k : -1;
}

std::vector<VertexId> first_n(std::size_t n) {
    std::vector<VertexId> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<VertexId>(i);
    return c;
}

}  // namespace

TEST(Completion, TriangulationCounts) {
    std::vector<std::size_t> want{2, 5, 14, 42, 132, 429};
    for (std::size_t len = 4; len <= 9; ++len) {
        auto family = enumerate_cycle_triangulations(first_n(len));
        EXPECT_EQ(family.size(), want[len - 4]);
        for (const auto& t : family) EXPECT_EQ(t.size(), len - 3);
        EXPECT_EQ(detail::check_triangulations(len), std::nullopt);
    }
    EXPECT_THROW(enumerate_cycle_triangulations(first_n(3)), ContractViolation);
}

TEST(Completion, TriangulationsUseCycleIds) {
    std::vector<VertexId> cyc{7, 3, 9, 12};
    auto family = enumerate_cycle_triangulations(cyc);
    std::set<EdgeSet> got(family.begin(), family.end());
    EXPECT_EQ(got, (std::set<EdgeSet>{{Edge(7, 9)}, {Edge(3, 12)}}));
}

TEST(Completion, Cycles) {
    expect_sound(make_cycle(4), 1, interval_completion(make_cycle(4), 1));
    EXPECT_FALSE(interval_completion(make_cycle(9), 5).yes());
    expect_sound(make_cycle(9), 6, interval_completion(make_cycle(9), 6));
}

TEST(Completion, CycleOptimumIsLengthMinusThree) {
    for (std::size_t len = 4; len <= 9; ++len) {
        Graph g = make_cycle(len);
        EXPECT_EQ(solver_optimum(g, 6), static_cast<int>(len - 3));
        auto opt = brute_force_min_completion(g, len - 3);
        ASSERT_TRUE(opt);
        EXPECT_EQ(opt->size, len - 3);
    }
}

TEST(Completion, BareType1GadgetMatchesOracle) {
    auto gad = make_gadget(ATKind::Type1, 7);
    auto opt = brute_force_min_completion(gad.graph, 2);
    ASSERT_TRUE(opt);
    EXPECT_EQ(opt->size, 1U);
    auto [k, r] = optimize_completion(gad.graph, 3);
    EXPECT_EQ(k, 1);
    expect_sound(gad.graph, k, r);
}

TEST(Completion, LongGadgetsNeedOneEdge) {
    for (auto kind : {ATKind::Type1, ATKind::Type2}) {
        auto gad = make_gadget(kind, 14);
        EXPECT_FALSE(interval_completion(gad.graph, 0).yes());
        expect_sound(gad.graph, 1, interval_completion(gad.graph, 1));
    }
}

TEST(Completion, FillKinds) {
    auto gad = make_gadget(ATKind::Type1, 8);
    const BigAT& at = gad.at;
    EXPECT_EQ(classify_fill(at, Edge(at.a, at.u)), FillKind::Cross);
    EXPECT_EQ(classify_fill(at, Edge(at.c, at.at(3))), FillKind::Long);
    EXPECT_EQ(classify_fill(at, Edge(at.a, at.at(4))), FillKind::Bottom);
    EXPECT_EQ(classify_fill(at, Edge(at.at(2), at.at(5))), FillKind::Bottom);
    // c-a is long for either type
    EXPECT_EQ(classify_fill(at, Edge(at.a, at.c)), FillKind::Long);
    EXPECT_EQ(classify_fill(at, Edge(at.a, 99)), std::nullopt);
    auto t2 = make_gadget(ATKind::Type2, 8);
    EXPECT_EQ(classify_fill(t2.at, Edge(t2.at.a, *t2.at.w)), FillKind::Cross);
    EXPECT_EQ(classify_fill(t2.at, Edge(t2.at.c, t2.at.a)), FillKind::Long);
}

TEST(Completion, AtOptionsOrder) {
    auto gad = make_gadget(ATKind::Type1, 14);
    auto opts = detail::completion_at_options(gad.graph, gad.at);
    // 2 cross, 12 long, 2 bottom batches, separator batch
    ASSERT_EQ(opts.size(), 17U);
    EXPECT_EQ(opts[0], EdgeSet{Edge(gad.at.a, gad.at.u)});
    EXPECT_EQ(opts[2], EdgeSet{Edge(gad.at.c, gad.at.at(1))});
    EXPECT_EQ(opts[14].size(), 14U);
    EXPECT_TRUE(opts[14].count(Edge(gad.at.a, gad.at.b)));
    auto t2 = make_gadget(ATKind::Type2, 14);
    EXPECT_EQ(detail::completion_at_options(t2.graph, t2.at).size(), 19U);
}

TEST(Completion, AgreesWithOracleOnAllSmallGraphs) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : brute::nonisomorphic_graphs(n)) {
            auto opt = brute_force_min_completion(g, 4);
            if (!opt) continue;
            EXPECT_EQ(solver_optimum(g, 4), static_cast<int>(opt->size));
        }
}

TEST(Completion, AgreesWithOracleOnRandomGraphs) {
    Rng rng(33);
    int compared = 0;
    for (int round = 0; round < 80 && compared < 30; ++round) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(7, 9)(rng);
        Graph g = round % 2 ? make_gnp(n, 0.45, rng) : make_random_chordal(n, rng);
        auto opt = brute_force_min_completion(g, 3);
        if (!opt) continue;
        ++compared;
        EXPECT_EQ(solver_optimum(g, 3), static_cast<int>(opt->size)) << round;
    }
    EXPECT_GE(compared, 15);
}

TEST(Completion, SoundAndMonotone) {
    Rng rng(9);
    for (int round = 0; round < 40; ++round) {
        Graph g = make_gnp(10, 0.4, rng);
        bool seen_yes = false;
        for (int k = 0; k <= 4; ++k) {
            auto r = interval_completion(g, k);
            if (seen_yes) {
                EXPECT_TRUE(r.yes()) << round << " k=" << k;
            }
            if (r.yes()) {
                expect_sound(g, k, r);
                seen_yes = true;
            }
        }
    }
}

TEST(Completion, ParallelRootMatchesSequential) {
    Rng rng(14);
    for (int round = 0; round < 20; ++round) {
        Graph g = make_gnp(9, 0.4, rng);
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(interval_completion(g, k, {true, false}).solution, interval_completion(g, k, {true, true}).solution);
    }
}

TEST(Completion, SuitePassesOnSeededInstances) {
    auto rep = run_completion_suite(40, 17);
    EXPECT_EQ(rep.instances, 40U);
    for (const auto& f : rep.failures) ADD_FAILURE() << f.property << ": " << f.instance << ": " << f.message;
}
