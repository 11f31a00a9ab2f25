#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "obstructions.hpp"
#include "recognition.hpp"

namespace ifpt {

// Neighbourhood bookkeeping around a big AT. Path positions run 0..p+1 with
// a at 0 and b at p+1. Only vertices outside N[c], off the template, are
// sorted into the families; single[i], pair[i], triple[i] hold the vertices
// whose path neighbours are exactly {i}, {i,i+1}, {i,i+1,i+2}.
struct ATContext {
    BigAT at;
    VertexSet dominating;
    VertexSet inner_vertices;
    Graph inner;
    VertexSet boundary_b;
    VertexSet boundary_e;
    std::vector<VertexSet> single;  // index 1..p used
    std::vector<VertexSet> pair;    // index 0..p
    std::vector<VertexSet> triple;  // index 0..p-1
};

namespace detail {

inline std::string describe(const BigAT& at) {
    return std::string(to_string(at.kind)) + " AT (a=" + std::to_string(at.a) + ", b=" + std::to_string(at.b) +
           ", c=" + std::to_string(at.c) + ", p=" + std::to_string(at.p()) + ")";
}

}  // namespace detail

inline ATContext build_context(const Graph& g, const BigAT& at) {
    if (!matches_template(g, at)) throw ContractViolation("build_context: not an induced template of the graph");
    const std::size_t p = at.p();
    ATContext ctx;
    ctx.at = at;
    ctx.single.resize(p + 2);
    ctx.pair.resize(p + 1);
    ctx.triple.resize(p);

    const std::size_t ci = g.index(at.c);
    std::vector<std::size_t> pos_idx(p + 2);
    for (std::size_t i = 0; i <= p + 1; ++i) pos_idx[i] = g.index(at.at(i));

    Bits path_bits(g.order());
    for (std::size_t i = 1; i <= p; ++i) path_bits.set(pos_idx[i]);

    Bits dom = g.all_bits();
    path_bits.for_each([&](std::size_t i) { dom &= g.row(i); });
    ctx.dominating = g.to_set(dom);
    if (!is_clique(g, dom)) throw StructureViolation("dominating vertices of " + detail::describe(at) + " are not a clique");
    if (!dom.subset_of(g.row(ci)))
        throw StructureViolation("a dominating vertex of " + detail::describe(at) + " misses c");

    Bits template_bits = g.to_bits(at.vertices());
    Bits outside_c = g.all_bits() - g.closed_row(ci);
    Bits inner(g.order());
    for (std::size_t i = 3; i + 2 <= p; ++i) inner |= g.closed_row(pos_idx[i]) - g.row(ci);
    ctx.inner_vertices = g.to_set(inner);
    ctx.inner = induced_subgraph(g, inner);

    (outside_c - template_bits).for_each([&](std::size_t x) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i <= p + 1; ++i)
            if (g.linked(x, pos_idx[i])) hits.push_back(i);
        if (hits.empty()) return;
        bool consecutive = hits.size() <= 3 && hits.back() - hits.front() + 1 == hits.size();
        if (!consecutive)
            throw StructureViolation("vertex " + std::to_string(g.id(x)) + " sees non-consecutive path vertices of " +
                                     detail::describe(at));
        VertexId v = g.id(x);
        if (hits.size() == 1)
            ctx.single[hits[0]].insert(v);
        else if (hits.size() == 2)
            ctx.pair[hits[0]].insert(v);
        else
            ctx.triple[hits[0]].insert(v);
    });
    // single[0] and single[p+1] see only a or b; they belong to no family
    ctx.single[0].clear();
    ctx.single[p + 1].clear();

    auto add = [](VertexSet& into, const VertexSet& from) { into.insert(from.begin(), from.end()); };
    add(ctx.boundary_b, ctx.pair[0]);
    add(ctx.boundary_b, ctx.triple[0]);
    add(ctx.boundary_b, ctx.pair[1]);
    add(ctx.boundary_b, ctx.single[1]);
    ctx.boundary_b.insert(at.at(1));
    add(ctx.boundary_b, ctx.single[2]);
    add(ctx.boundary_e, ctx.single[p - 1]);
    add(ctx.boundary_e, ctx.pair[p - 1]);
    add(ctx.boundary_e, ctx.triple[p - 1]);
    add(ctx.boundary_e, ctx.pair[p]);
    add(ctx.boundary_e, ctx.single[p]);
    ctx.boundary_e.insert(at.at(p));
    return ctx;
}

// One step of the descent: the AT found at that depth, and a path vertex of
// the previous AT adjacent to all of its path (if any).
struct DescentStep {
    BigAT at;
    std::optional<VertexId> dominated_at;
};

struct RipeAT {
    ATContext context;  // built in the graph of the final depth
    std::size_t depth = 0;
    std::vector<DescentStep> trace;
};

struct NoSolution {
    std::size_t depth = 0;
    std::vector<DescentStep> trace;
};

namespace detail {

inline std::optional<VertexId> dominating_path_vertex(const Graph& g, const BigAT& outer, const BigAT& inner) {
    for (std::size_t i = 2; i + 1 <= outer.p(); ++i) {
        VertexId v = outer.at(i);
        bool all = true;
        for (auto x : inner.path)
            if (x == v || !g.adjacent(v, x)) {
                all = false;
                break;
            }
        if (all) return v;
    }
    return std::nullopt;
}

}  // namespace detail

// Start from a minimum big AT and keep moving into its inner region while
// that region still has an AT. Gives up once the depth passes k.
inline std::variant<RipeAT, NoSolution> find_ripe_at(const Graph& g, int k) {
    auto first = find_minimum_big_at(g);
    if (!first) throw StructureViolation("find_ripe_at: no big AT in a graph assumed non-interval");
    std::vector<DescentStep> trace{{*first, std::nullopt}};
    Graph level = g;
    for (std::size_t i = 0;; ++i) {
        ATContext ctx = build_context(level, trace.back().at);
        if (is_interval(ctx.inner)) return RipeAT{std::move(ctx), i, std::move(trace)};
        if (static_cast<long>(i) > k) return NoSolution{i, std::move(trace)};
        auto next = find_minimum_big_at(ctx.inner);
        if (!next) throw StructureViolation("inner region of " + detail::describe(ctx.at) + " has an AT but no big AT");
        auto dom = detail::dominating_path_vertex(level, ctx.at, *next);
        trace.push_back({*next, dom});
        level = std::move(ctx.inner);
    }
}

}  // namespace ifpt
