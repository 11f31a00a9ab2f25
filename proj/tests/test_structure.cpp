#include <gtest/gtest.h>

#include <intervalfpt/generators.hpp>
#include <intervalfpt/properties.hpp>
#include <intervalfpt/structure.hpp>

#include "support.hpp"

using namespace ifpt;

namespace {

Graph with_extra(const Graph& g, const std::vector<VertexId>& nbrs) {
    std::vector<VertexId> ids = g.ids();
    VertexId x = ids.back() + 1;
    ids.push_back(x);
    Graph h(ids);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
    for (auto y : nbrs) h.add_edge(x, y);
    return h;
}

}  // namespace

TEST(Structure, BareGadgetContext) {
    auto gad = make_gadget(ATKind::Type1, 7);
    auto ctx = build_context(gad.graph, gad.at);
    EXPECT_EQ(ctx.dominating, VertexSet{gad.at.u});
    // N[v_i] - N(c) for i = 3..5, and u is in N(c)
    VertexSet inner;
    for (std::size_t i = 2; i <= 6; ++i) inner.insert(gad.at.at(i));
    EXPECT_EQ(ctx.inner_vertices, inner);
    EXPECT_TRUE(is_interval(ctx.inner));
    for (std::size_t i = 0; i <= 7; ++i) EXPECT_TRUE(ctx.pair[i].empty());
    EXPECT_EQ(ctx.boundary_b, VertexSet{gad.at.at(1)});
    EXPECT_EQ(ctx.boundary_e, VertexSet{gad.at.at(7)});
}

TEST(Structure, VertexOnPathAndCentreIsDominating) {
    auto gad = make_gadget(ATKind::Type1, 7);
    // also joined to u, otherwise c-u-v1-x would be a 4-hole
    std::vector<VertexId> nbrs(gad.at.path.begin(), gad.at.path.end());
    nbrs.push_back(gad.at.c);
    nbrs.push_back(gad.at.u);
    Graph g = with_extra(gad.graph, nbrs);
    ASSERT_TRUE(brute::brute_is_chordal(g));
    auto ctx = build_context(g, gad.at);
    VertexId x = g.ids().back();
    EXPECT_EQ(ctx.dominating, (VertexSet{gad.at.u, x}));
}

TEST(Structure, VertexOnFirstTwoPathVerticesIsOnBoundary) {
    auto gad = make_gadget(ATKind::Type1, 7);
    Graph g = with_extra(gad.graph, {gad.at.at(1), gad.at.at(2)});
    auto ctx = build_context(g, gad.at);
    VertexId x = g.ids().back();
    EXPECT_EQ(ctx.pair[1], VertexSet{x});
    EXPECT_TRUE(ctx.boundary_b.count(x));
    EXPECT_FALSE(ctx.boundary_e.count(x));
}

TEST(Structure, FamiliesAtTheEnds) {
    auto gad = make_gadget(ATKind::Type1, 8);
    Graph g = with_extra(gad.graph, {gad.at.a, gad.at.at(1)});
    g = with_extra(g, {gad.at.at(8), gad.at.b});
    auto ctx = build_context(g, gad.at);
    auto ids = g.ids();
    EXPECT_EQ(ctx.pair[0], VertexSet{ids[ids.size() - 2]});
    EXPECT_EQ(ctx.pair[8], VertexSet{ids.back()});
    EXPECT_TRUE(ctx.boundary_b.count(ids[ids.size() - 2]));
    EXPECT_TRUE(ctx.boundary_e.count(ids.back()));
}

TEST(Structure, VertexOnlySeeingAIsUnclassified) {
    auto gad = make_gadget(ATKind::Type1, 7);
    Graph g = with_extra(gad.graph, {gad.at.a});
    auto ctx = build_context(g, gad.at);
    VertexId x = g.ids().back();
    for (const auto& s : ctx.single) EXPECT_FALSE(s.count(x));
    EXPECT_FALSE(ctx.boundary_b.count(x));
}

TEST(Structure, NonConsecutivePathNeighboursAreReported) {
    auto gad = make_gadget(ATKind::Type1, 9);
    Graph g = with_extra(gad.graph, {gad.at.at(2), gad.at.at(5)});
    EXPECT_THROW(build_context(g, gad.at), StructureViolation);
}

TEST(Structure, WrongTemplateIsAContractViolation) {
    auto gad = make_gadget(ATKind::Type1, 7);
    BigAT at = gad.at;
    std::swap(at.a, at.c);
    EXPECT_THROW(build_context(gad.graph, at), ContractViolation);
}

TEST(Structure, RipeAtDepthZeroForBareGadget) {
    for (auto kind : {ATKind::Type1, ATKind::Type2}) {
        auto gad = make_gadget(kind, 9);
        auto r = find_ripe_at(gad.graph, 0);
        ASSERT_TRUE(std::holds_alternative<RipeAT>(r));
        const auto& ripe = std::get<RipeAT>(r);
        EXPECT_EQ(ripe.depth, 0U);
        EXPECT_EQ(ripe.context.at.kind, kind);
        EXPECT_EQ(ripe.trace.size(), 1U);
    }
}

TEST(Structure, TwoNestedGadgetsRipenAtDepthOne) {
    auto nested = make_nested_gadget(2, 7);
    ASSERT_TRUE(brute::brute_is_chordal(nested.graph));
    auto r = find_ripe_at(nested.graph, 3);
    ASSERT_TRUE(std::holds_alternative<RipeAT>(r));
    const auto& ripe = std::get<RipeAT>(r);
    EXPECT_EQ(ripe.depth, 1U);
    EXPECT_EQ(ripe.context.at.path, nested.levels[1].path);
    ASSERT_EQ(ripe.trace.size(), 2U);
    // the middle vertex of the outer path sees the whole inner path
    const BigAT& outer = nested.levels[0];
    EXPECT_EQ(ripe.trace[1].dominated_at, outer.path[(outer.p() - 1) / 2]);
}

TEST(Structure, DescentDepthFollowsNesting) {
    for (std::size_t levels = 1; levels <= 4; ++levels) {
        auto nested = make_nested_gadget(levels, 7);
        auto r = find_ripe_at(nested.graph, 10);
        ASSERT_TRUE(std::holds_alternative<RipeAT>(r)) << levels;
        EXPECT_EQ(std::get<RipeAT>(r).depth, levels - 1);
    }
}

TEST(Structure, DeepNestingGivesUp) {
    // abort once the depth passes k while the inner region is still not interval
    for (int k = 0; k <= 2; ++k) {
        auto ripe = make_nested_gadget(static_cast<std::size_t>(k) + 2, 7);
        EXPECT_TRUE(std::holds_alternative<RipeAT>(find_ripe_at(ripe.graph, k))) << k;
        auto deep = make_nested_gadget(static_cast<std::size_t>(k) + 3, 7);
        auto r = find_ripe_at(deep.graph, k);
        ASSERT_TRUE(std::holds_alternative<NoSolution>(r)) << k;
        EXPECT_EQ(std::get<NoSolution>(r).depth, static_cast<std::size_t>(k) + 1);
    }
}

TEST(Structure, IntervalGraphHasNoRipeAt) {
    EXPECT_THROW(find_ripe_at(make_path(6), 2), StructureViolation);
}

TEST(Structure, SuitePassesOnSeededInstances) {
    auto rep = run_structure_suite(60, 11);
    EXPECT_EQ(rep.instances, 60U);
    for (const auto& f : rep.failures) ADD_FAILURE() << f.property << ": " << f.instance << ": " << f.message;
}

TEST(Structure, SuiteSurfacesCorruptedGadgets) {
    auto rep = run_structure_suite(8, 11, true);
    ASSERT_FALSE(rep.failures.empty());
    EXPECT_NE(rep.failures.front().message.find("StructureViolation"), std::string::npos);
    EXPECT_LT(rep.failures.front().minimized.order(), rep.failures.front().graph.order());
}
