#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "branching.hpp"
#include "deletion.hpp"
#include "obstructions.hpp"
#include "structure.hpp"

namespace ifpt {

using CompletionResult = SolveResult<EdgeSet>;

namespace detail {

inline void triangulate(const std::vector<VertexId>& poly, std::vector<EdgeSet>& out) {
    const std::size_t n = poly.size();
    if (n <= 3) {
        out.emplace_back();
        return;
    }
    // poly.front()-poly.back() lies in exactly one triangle; pick its apex.
    for (std::size_t j = 1; j + 1 < n; ++j) {
        std::vector<EdgeSet> left, right;
        triangulate(std::vector<VertexId>(poly.begin(), poly.begin() + static_cast<long>(j) + 1), left);
        triangulate(std::vector<VertexId>(poly.begin() + static_cast<long>(j), poly.end()), right);
        for (const auto& l : left)
            for (const auto& r : right) {
                EdgeSet s = l;
                s.insert(r.begin(), r.end());
                if (j != 1) s.emplace(poly.front(), poly[j]);
                if (j + 2 != n) s.emplace(poly[j], poly.back());
                out.push_back(std::move(s));
            }
    }
}

}  // namespace detail

// Every triangulation of the polygon spanned by the cycle, L-3 chords each.
inline std::vector<EdgeSet> enumerate_cycle_triangulations(const std::vector<VertexId>& cycle) {
    if (cycle.size() < 4) throw ContractViolation("triangulations need a cycle of length >= 4");
    std::vector<EdgeSet> out;
    detail::triangulate(cycle, out);
    return out;
}

enum class FillKind { Long, Cross, Bottom };

inline const char* to_string(FillKind k) {
    return k == FillKind::Long ? "long" : k == FillKind::Cross ? "cross" : "bottom";
}

// Kind of a non-edge relative to a big AT, or nothing if the edge does not
// touch the template that way.
inline std::optional<FillKind> classify_fill(const BigAT& at, const Edge& e) {
    auto pos = [&](VertexId v) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i <= at.p() + 1; ++i)
            if (at.at(i) == v) return i;
        return std::nullopt;
    };
    auto is = [&](VertexId x, VertexId y) { return Edge(x, y) == e; };
    if (at.kind == ATKind::Type1 ? (is(at.a, at.u) || is(at.b, at.u)) : (is(at.a, *at.w) || is(at.b, at.u)))
        return FillKind::Cross;
    auto pu = pos(e.u), pv = pos(e.v);
    if ((e.u == at.c && pv) || (e.v == at.c && pu)) return FillKind::Long;
    if (pu && pv && (*pu > *pv ? *pu - *pv : *pv - *pu) > 1) return FillKind::Bottom;
    return std::nullopt;
}

namespace detail {

inline EdgeSet non_edges_within(const Graph& g, const VertexSet& s) {
    EdgeSet out;
    for (auto x = s.begin(); x != s.end(); ++x)
        for (auto y = std::next(x); y != s.end(); ++y)
            if (!g.adjacent(*x, *y)) out.emplace(*x, *y);
    return out;
}

// Non-edges from the component of c inside U to the path separator, where
// U holds the neighbours of u with no neighbour among a, v1..vp, b.
inline std::optional<EdgeSet> separator_batch(const Graph& g, const BigAT& at) {
    auto x = at_path_separator(g, at);
    if (!x) return std::nullopt;
    Bits on_path(g.order());
    for (std::size_t i = 0; i <= at.p() + 1; ++i) on_path.set(g.index(at.at(i)));
    Bits u_side(g.order());
    g.row(g.index(at.u)).for_each([&](std::size_t y) {
        if (!g.row(y).intersects(on_path) && !on_path.test(y)) u_side.set(y);
    });
    auto label = component_labels(g, u_side);
    const std::size_t ci = g.index(at.c);
    EdgeSet s3;
    u_side.for_each([&](std::size_t y) {
        if (label[y] != label[ci]) return;
        for (auto xv : *x)
            if (!g.adjacent(g.id(y), xv) && g.id(y) != xv) s3.emplace(g.id(y), xv);
    });
    return s3;
}

// Branch list at a ripe AT, in order: cross fills, long fills, the two
// bottom batches, and the batch joining c's side to the path separator.
inline std::vector<EdgeSet> completion_at_options(const Graph& g, const BigAT& at) {
    const std::size_t p = at.p();
    std::vector<EdgeSet> options;
    auto single = [&](VertexId x, VertexId y) { options.push_back({Edge(x, y)}); };
    if (at.kind == ATKind::Type1) {
        single(at.a, at.u);
        single(at.b, at.u);
    } else {
        single(at.a, *at.w);
        single(at.b, at.u);
    }
    std::vector<std::size_t> near;
    for (std::size_t i = 1; i <= std::min<std::size_t>(6, p); ++i) near.push_back(i);
    for (std::size_t i = (p > 5 ? p - 5 : 1); i <= p; ++i)
        if (std::find(near.begin(), near.end(), i) == near.end()) near.push_back(i);
    if (at.kind == ATKind::Type2) single(at.c, at.a);
    for (auto i : near) single(at.c, at.at(i));
    if (at.kind == ATKind::Type2) single(at.c, at.b);

    EdgeSet s1{Edge(at.a, at.b)}, s2{Edge(at.a, at.b)};
    for (std::size_t i = 2; i <= p; ++i) s1.emplace(at.a, at.at(i));
    for (std::size_t i = 1; i + 1 <= p; ++i) s2.emplace(at.b, at.at(i));
    options.push_back(std::move(s1));
    options.push_back(std::move(s2));

    if (auto s3 = separator_batch(g, at); s3 && !s3->empty()) options.push_back(std::move(*s3));
    return options;
}

class CompletionSearch : public BranchEngine<CompletionSearch, EdgeSet> {
public:
    using BranchEngine::BranchEngine;

    static Graph apply(const Graph& g, const EdgeSet& f) { return add_edges(g, f); }
    static std::size_t cost(const EdgeSet& f) { return f.size(); }
    static void join(EdgeSet& into, const EdgeSet& part) { into.insert(part.begin(), part.end()); }

    std::optional<EdgeSet> run(const Graph& g, int k) { return visit(g, k, 0, false); }

    std::optional<EdgeSet> expand(const Graph& g, int k, std::size_t depth, bool) {
        if (!chordal_fast(g)) {
            auto hole = chordless_cycle_at(g, g.all_bits(), 4);
            if (!hole) throw StructureViolation("non-chordal graph without a hole");
            auto options = enumerate_cycle_triangulations(g.to_ids(*hole));
            stats_.record(NodeKind::Hole, options.size());
            return branch(g, k, depth, false, options);
        }
        if (auto o = find_small_obstruction(g)) {
            std::vector<EdgeSet> options;
            for (const auto& e : non_edges_within(g, o->vertices)) options.push_back({e});
            stats_.record(NodeKind::SmallObstruction, options.size());
            return branch(g, k, depth, false, options);
        }
        auto found = find_ripe_at(g, k);
        if (std::holds_alternative<NoSolution>(found)) return std::nullopt;
        auto options = completion_at_options(g, std::get<RipeAT>(found).context.at);
        stats_.record(NodeKind::BigAT, options.size());
        return branch(g, k, depth, false, options);
    }
};

}  // namespace detail

inline CompletionResult interval_completion(const Graph& g, int k, SolveOptions opt = {}) {
    if (k < 0) throw ContractViolation("negative budget");
    detail::Stopwatch clock;
    detail::CompletionSearch search(opt);
    CompletionResult r;
    r.solution = search.run(g, k);
    r.stats = search.stats();
    r.stats.elapsed_ms = clock.ms();
    return r;
}

inline std::pair<int, CompletionResult> optimize_completion(const Graph& g, int kmax, SolveOptions opt = {}) {
    SearchStats total;
    double ms = 0;
    for (int k = 0;; ++k) {
        auto r = interval_completion(g, k, opt);
        total.merge(r.stats);
        ms += r.stats.elapsed_ms;
        if (r.yes() || k >= kmax) {
            r.stats = total;
            r.stats.elapsed_ms = ms;
            return {k, std::move(r)};
        }
    }
}

}  // namespace ifpt
