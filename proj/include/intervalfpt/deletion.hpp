#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "branching.hpp"
#include "cycles.hpp"
#include "obstructions.hpp"
#include "separator.hpp"
#include "structure.hpp"

namespace ifpt {

using DeletionResult = SolveResult<VertexSet>;

namespace detail {

// Single-vertex branches around a ripe AT, in the order a, b, c, u, [w],
// v1..v6, vp..v(p-5), duplicates dropped.
inline std::vector<VertexId> at_single_branches(const BigAT& at) {
    std::vector<VertexId> out{at.a, at.b, at.c, at.u};
    if (at.w) out.push_back(*at.w);
    const std::size_t p = at.p();
    for (std::size_t i = 1; i <= std::min<std::size_t>(6, p); ++i) out.push_back(at.at(i));
    for (std::size_t i = p; i + 5 >= p && i >= 1; --i) out.push_back(at.at(i));
    std::vector<VertexId> uniq;
    for (auto v : out)
        if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);
    return uniq;
}

// Vertices outside N(c) seen by v_j for 5 <= j <= p-4.
inline VertexSet at_middle_band(const Graph& g, const BigAT& at) {
    Bits band(g.order());
    const std::size_t ci = g.index(at.c);
    for (std::size_t j = 5; j + 4 <= at.p(); ++j) band |= g.closed_row(g.index(at.at(j))) - g.row(ci);
    return g.to_set(band);
}

// Minimum v6 / v(p-5) separator avoiding N(c). It only exists as a
// distinct option when the two ends are far apart (p >= 13); for shorter
// paths the single branches already cover the whole template.
inline std::optional<VertexSet> at_path_separator(const Graph& g, const BigAT& at) {
    if (at.p() < 13) return std::nullopt;
    return minimum_vertex_separator(g, at.at(6), at.at(at.p() - 5), g.neighbors(at.c));
}

class DeletionSearch : public BranchEngine<DeletionSearch, VertexSet> {
public:
    using BranchEngine::BranchEngine;

    static Graph apply(const Graph& g, const VertexSet& s) { return remove_vertices(g, s); }
    static std::size_t cost(const VertexSet& s) { return s.size(); }
    static void join(VertexSet& into, const VertexSet& part) { into.insert(part.begin(), part.end()); }

    std::optional<VertexSet> run(const Graph& g, int k, bool small_free) { return visit(g, k, 0, small_free); }

    // `small_free`: g is known to have no small obstruction. Deleting
    // vertices keeps it that way.
    std::optional<VertexSet> expand(const Graph& g, int k, std::size_t depth, bool small_free) {
        if (!small_free) {
            if (auto o = find_small_obstruction(g)) {
                std::vector<VertexSet> options;
                for (auto v : o->vertices) options.push_back({v});
                stats_.record(NodeKind::SmallObstruction, options.size());
                return branch(g, k, depth, false, options);
            }
        }
        if (chordal_fast(g)) return ripe_at_step(g, k, depth);
        return cycle_step(g, k, depth);
    }

private:
    std::optional<VertexSet> ripe_at_step(const Graph& g, int k, std::size_t depth) {
        auto found = find_ripe_at(g, k);
        if (std::holds_alternative<NoSolution>(found)) return std::nullopt;
        const BigAT& at = std::get<RipeAT>(found).context.at;
        std::vector<VertexSet> options;
        for (auto v : at_single_branches(at)) options.push_back({v});
        if (auto band = at_middle_band(g, at); !band.empty()) options.push_back(std::move(band));
        if (auto x = at_path_separator(g, at)) options.push_back(std::move(*x));
        stats_.record(NodeKind::BigAT, options.size());
        return branch(g, k, depth, true, options);
    }

    std::optional<VertexSet> cycle_step(const Graph& g, int k, std::size_t depth) {
        auto cs = find_clean_cycle(g);
        if (!cs) throw StructureViolation("non-chordal graph without a hole");
        if (is_ripe(g, *cs)) {
            std::vector<VertexSet> options{VertexSet(cs->cycle.begin(), cs->cycle.end()), min_cycle_separator(g, *cs)};
            stats_.record(NodeKind::Cycle, options.size());
            return branch(g, k, depth, true, options);
        }
        // Clean but not ripe: settle an AT sitting next to three consecutive
        // cycle vertices with the chordal routine, then continue.
        const long p = static_cast<long>(cs->p());
        Bits dom = g.to_bits(cs->dominating);
        std::optional<Graph> local;
        for (long i = 0; i < p && !local; ++i) {
            Bits w = g.closed_row(g.index(cs->at(i - 1))) | g.closed_row(g.index(cs->at(i))) |
                     g.closed_row(g.index(cs->at(i + 1)));
            Graph h = induced_subgraph(g, w - dom);
            if (has_at_template(h)) local = std::move(h);
        }
        if (!local) throw StructureViolation("clean cycle is not ripe but no AT sits next to three consecutive vertices");
        if (!chordal_fast(*local)) throw StructureViolation("AT next to a clean cycle lies in a non-chordal region");
        stats_.record(NodeKind::CycleLocal, 1);
        for (int j = 1; j <= k; ++j) {
            auto f = visit(*local, j, depth + 1, true);
            if (!f) continue;
            auto rest = visit(remove_vertices(g, *f), k - static_cast<int>(f->size()), depth + 1, true);
            if (!rest) return std::nullopt;
            join(*rest, *f);
            return rest;
        }
        return std::nullopt;
    }
};

inline DeletionResult run_deletion(const Graph& g, int k, bool small_free, SolveOptions opt) {
    if (k < 0) throw ContractViolation("negative budget");
    Stopwatch clock;
    DeletionSearch search(opt);
    DeletionResult r;
    r.solution = search.run(g, k, small_free);
    r.stats = search.stats();
    r.stats.elapsed_ms = clock.ms();
    return r;
}

}  // namespace detail

// Chordal input without small obstructions.
inline DeletionResult chordal_interval(const Graph& g, int k, SolveOptions opt = {}) {
    if (!detail::chordal_fast(g)) throw StructureViolation("chordal_interval: input is not chordal");
    if (auto o = find_small_obstruction(g))
        throw StructureViolation("chordal_interval: input has a small obstruction (" + o->family + ")");
    return detail::run_deletion(g, k, true, opt);
}

inline DeletionResult interval_deletion(const Graph& g, int k, SolveOptions opt = {}) {
    return detail::run_deletion(g, k, false, opt);
}

// Smallest k in 0..kmax with a Yes answer; stats summed over all runs.
inline std::pair<int, DeletionResult> optimize_deletion(const Graph& g, int kmax, SolveOptions opt = {}) {
    SearchStats total;
    double ms = 0;
    for (int k = 0; k <= kmax; ++k) {
        auto r = interval_deletion(g, k, opt);
        total.merge(r.stats);
        ms += r.stats.elapsed_ms;
        if (r.yes() || k == kmax) {
            r.stats = total;
            r.stats.elapsed_ms = ms;
            return {k, std::move(r)};
        }
    }
    return {kmax, DeletionResult{std::nullopt, total}};
}

}  // namespace ifpt
