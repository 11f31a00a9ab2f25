#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "holes.hpp"

namespace ifpt {

struct ChordalityResult {
    bool chordal = false;
    std::vector<VertexId> elimination_order;  // perfect elimination order when chordal
    std::vector<VertexId> hole;               // shortest chordless cycle otherwise
};

// Three pairwise non-adjacent vertices with connecting paths, each path
// avoiding the closed neighbourhood of the third vertex.
struct ATWitness {
    VertexId a = 0, b = 0, c = 0;
    std::vector<VertexId> path_ab, path_bc, path_ca;

    VertexSet vertices() const {
        VertexSet s;
        for (const auto* p : {&path_ab, &path_bc, &path_ca}) s.insert(p->begin(), p->end());
        return s;
    }
};

namespace detail {

// Lex-BFS visiting order by partition refinement; ties go to the smaller id.
inline std::vector<std::size_t> lex_bfs(const Graph& g) {
    std::vector<std::vector<std::size_t>> slices;
    if (g.order() == 0) return {};
    slices.emplace_back();
    for (std::size_t i = 0; i < g.order(); ++i) slices.back().push_back(i);
    std::vector<std::size_t> order;
    order.reserve(g.order());
    while (!slices.empty()) {
        std::size_t v = slices.front().front();
        slices.front().erase(slices.front().begin());
        if (slices.front().empty()) slices.erase(slices.begin());
        order.push_back(v);
        std::vector<std::vector<std::size_t>> refined;
        refined.reserve(slices.size() * 2);
        for (auto& slice : slices) {
            std::vector<std::size_t> hit, miss;
            for (auto x : slice) (g.linked(v, x) ? hit : miss).push_back(x);
            if (!hit.empty()) refined.push_back(std::move(hit));
            if (!miss.empty()) refined.push_back(std::move(miss));
        }
        slices = std::move(refined);
    }
    return order;
}

inline bool check_elimination_order(const Graph& g, const std::vector<std::size_t>& peo) {
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = i;
    for (std::size_t v : peo) {
        std::size_t parent = g.order();
        Bits later(g.order());
        g.row(v).for_each([&](std::size_t w) {
            if (pos[w] > pos[v]) {
                later.set(w);
                if (parent == g.order() || pos[w] < pos[parent]) parent = w;
            }
        });
        if (parent == g.order()) continue;
        later.reset(parent);
        if (!later.subset_of(g.row(parent))) return false;
    }
    return true;
}

inline bool chordal_fast(const Graph& g) {
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    return check_elimination_order(g, order);
}

// Component labels of g - N[z] for every z.
inline std::vector<std::vector<int>> avoidance_labels(const Graph& g) {
    std::vector<std::vector<int>> labels(g.order());
    Bits all = g.all_bits();
    for (std::size_t z = 0; z < g.order(); ++z) labels[z] = component_labels(g, all - g.closed_row(z));
    return labels;
}

inline std::optional<std::array<std::size_t, 3>> first_at_triple(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) return std::nullopt;
    auto lab = avoidance_labels(g);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (g.linked(a, b)) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (g.linked(a, c) || g.linked(b, c)) continue;
                if (lab[c][a] == lab[c][b] && lab[a][b] == lab[a][c] && lab[b][a] == lab[b][c])
                    return std::array<std::size_t, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

}  // namespace detail

inline ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult r;
    auto order = detail::lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (detail::check_elimination_order(g, order)) {
        r.chordal = true;
        r.elimination_order = g.to_ids(order);
        return r;
    }
    auto hole = find_chordless_cycle(g, 4);
    if (!hole || !is_chordless_cycle(g, *hole))
        throw StructureViolation("elimination order failed but no chordless cycle was found");
    r.hole = std::move(*hole);
    return r;
}

// First asteroidal triple in lexicographic order of (a < b < c), with
// lexicographically smallest shortest witness paths.
inline std::optional<ATWitness> find_at(const Graph& g) {
    auto t = detail::first_at_triple(g);
    if (!t) return std::nullopt;
    auto [a, b, c] = *t;
    Bits all = g.all_bits();
    ATWitness w;
    w.a = g.id(a);
    w.b = g.id(b);
    w.c = g.id(c);
    w.path_ab = g.to_ids(shortest_path(g, a, b, all - g.closed_row(c)));
    w.path_bc = g.to_ids(shortest_path(g, b, c, all - g.closed_row(a)));
    w.path_ca = g.to_ids(shortest_path(g, c, a, all - g.closed_row(b)));
    return w;
}

inline bool has_at(const Graph& g) { return detail::first_at_triple(g).has_value(); }

inline bool is_interval(const Graph& g) { return detail::chordal_fast(g) && !has_at(g); }

// Checks a claimed asteroidal triple against g directly.
inline bool is_at_triple(const Graph& g, VertexId a, VertexId b, VertexId c) {
    auto ia = g.find(a), ib = g.find(b), ic = g.find(c);
    if (!ia || !ib || !ic || a == b || b == c || a == c) return false;
    if (g.linked(*ia, *ib) || g.linked(*ia, *ic) || g.linked(*ib, *ic)) return false;
    Bits all = g.all_bits();
    auto joined = [&](std::size_t x, std::size_t y, std::size_t z) {
        return !shortest_path(g, x, y, all - g.closed_row(z)).empty();
    };
    return joined(*ia, *ib, *ic) && joined(*ib, *ic, *ia) && joined(*ic, *ia, *ib);
}

}  // namespace ifpt
