#pragma once

#include <deque>
#include <limits>
#include <vector>

#include "graph.hpp"

namespace ifpt {

// Minimum vertex set separating s from t in g minus `forbidden`, via unit
// vertex capacities (each vertex split into in/out halves) and BFS
// augmentation. The returned cut is the one closest to s: the vertices whose
// in-half is residual-reachable from s but whose out-half is not.
inline VertexSet minimum_vertex_separator(const Graph& g, VertexId s, VertexId t,
                                          const VertexSet& forbidden = {}) {
    if (s == t) throw NoSeparator("separator endpoints coincide");
    if (forbidden.count(s) || forbidden.count(t))
        throw ContractViolation("separator endpoint is forbidden");
    const std::size_t si = g.index(s), ti = g.index(t);
    if (g.linked(si, ti)) throw NoSeparator("separator endpoints are adjacent");

    const std::size_t n = g.order();
    Bits allowed = g.all_bits() - g.to_bits(forbidden);
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    const std::size_t nodes = 2 * n;
    std::vector<int> cap(nodes * nodes, 0);
    auto at = [&](std::size_t x, std::size_t y) -> int& { return cap[x * nodes + y]; };
    auto in = [](std::size_t v) { return 2 * v; };
    auto out = [](std::size_t v) { return 2 * v + 1; };

    allowed.for_each([&](std::size_t v) {
        at(in(v), out(v)) = (v == si || v == ti) ? inf : 1;
        (g.row(v) & allowed).for_each([&](std::size_t w) { at(out(v), in(w)) = inf; });
    });

    const std::size_t source = out(si), sink = in(ti);
    std::vector<std::size_t> parent(nodes);
    auto reach = [&](std::vector<char>& seen) {
        std::fill(seen.begin(), seen.end(), 0);
        std::deque<std::size_t> queue{source};
        seen[source] = 1;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y = 0; y < nodes; ++y) {
                if (seen[y] || at(x, y) <= 0) continue;
                seen[y] = 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    };

    std::vector<char> seen(nodes);
    while (true) {
        reach(seen);
        if (!seen[sink]) break;
        for (std::size_t y = sink; y != source; y = parent[y]) {
            at(parent[y], y) -= 1;
            at(y, parent[y]) += 1;
        }
    }

    VertexSet cut;
    allowed.for_each([&](std::size_t v) {
        if (seen[in(v)] && !seen[out(v)]) cut.insert(g.id(v));
    });
    return cut;
}

}  // namespace ifpt
