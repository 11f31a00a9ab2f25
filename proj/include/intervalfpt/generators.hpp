#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"
#include "obstructions.hpp"

namespace ifpt {

using Rng = std::mt19937_64;

struct Gadget {
    Graph graph;
    BigAT at;
};

// Bare asteroidal template. Ids: a=0, b=1, c=2, u=3, [w=4], then v1..vp.
inline Gadget make_gadget(ATKind kind, std::size_t p) {
    if (p == 0) throw ContractViolation("gadget path must be non-empty");
    BigAT at;
    at.kind = kind;
    at.a = 0;
    at.b = 1;
    at.c = 2;
    at.u = 3;
    VertexId next = 4;
    if (kind == ATKind::Type2) at.w = next++;
    for (std::size_t i = 0; i < p; ++i) at.path.push_back(next++);
    Graph g(next);
    for (const auto& e : at.edges()) g.add_edge(e.u, e.v);
    return {std::move(g), std::move(at)};
}

inline Graph make_cycle(std::size_t len) {
    if (len < 3) throw ContractViolation("cycle needs at least 3 vertices");
    Graph g(len);
    for (std::size_t i = 0; i < len; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % len));
    return g;
}

inline Graph make_path(std::size_t len) {
    Graph g(len);
    for (std::size_t i = 0; i + 1 < len; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return g;
}

inline Graph make_gnp(std::size_t n, double prob, Rng& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(prob);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) g.link(i, j);
    return g;
}

// Each new vertex joins a random subset of a random existing maximal clique,
// so the insertion order reversed is a perfect elimination order.
inline Graph make_random_chordal(std::size_t n, Rng& rng) {
    Graph g(n);
    std::vector<std::vector<std::size_t>> cliques;
    for (std::size_t v = 0; v < n; ++v) {
        if (cliques.empty()) {
            cliques.push_back({v});
            continue;
        }
        auto& host = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
        std::vector<std::size_t> pick;
        std::bernoulli_distribution coin(0.6);
        for (auto x : host)
            if (coin(rng)) pick.push_back(x);
        if (pick.empty()) pick.push_back(host[std::uniform_int_distribution<std::size_t>(0, host.size() - 1)(rng)]);
        for (auto x : pick) g.link(v, x);
        pick.push_back(v);
        if (pick.size() == host.size() + 1)
            host = pick;
        else
            cliques.push_back(pick);
    }
    return g;
}

// Intersection graph of random integer intervals in [0, span).
inline Graph make_random_interval(std::size_t n, std::size_t span, std::size_t max_len, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> iv(n);
    std::uniform_int_distribution<std::size_t> start(0, span - 1), len(0, max_len);
    for (auto& x : iv) {
        x.first = start(rng);
        x.second = x.first + len(rng);
    }
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) g.link(i, j);
    return g;
}

// Type1 templates nested inside one another: every vertex of level l+1 sees
// the centre and the middle path vertex of each shallower level. Path
// lengths grow by one per level so the outermost template is the minimum.
struct NestedGadget {
    Graph graph;
    std::vector<BigAT> levels;
};

inline NestedGadget make_nested_gadget(std::size_t levels, std::size_t base_p) {
    if (levels == 0 || base_p < big_at_min_path) throw ContractViolation("nested gadget needs levels >= 1 and p >= 7");
    std::vector<BigAT> ats;
    VertexId next = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> anchors;
    for (std::size_t l = 0; l < levels; ++l) {
        BigAT at;
        at.kind = ATKind::Type1;
        at.a = next++;
        at.b = next++;
        at.c = next++;
        at.u = next++;
        for (std::size_t i = 0; i < base_p + l; ++i) at.path.push_back(next++);
        for (const auto& e : at.edges()) edges.emplace_back(e.u, e.v);
        for (auto v : at.vertices())
            for (auto x : anchors) edges.emplace_back(v, x);
        anchors.push_back(at.u);
        anchors.push_back(at.path[(at.p() - 1) / 2]);
        ats.push_back(std::move(at));
    }
    Graph g(next);
    for (auto [x, y] : edges) g.add_edge(x, y);
    return {std::move(g), std::move(ats)};
}

// Disjoint union; ids of `second` are shifted past those of `first`.
inline Graph disjoint_union(const Graph& first, const Graph& second) {
    VertexId shift = first.order() == 0 ? 0 : first.ids().back() + 1;
    std::vector<VertexId> ids = first.ids();
    for (auto v : second.ids()) ids.push_back(v + shift);
    Graph g(ids);
    for (const auto& e : first.edges()) g.add_edge(e.u, e.v);
    for (const auto& e : second.edges()) g.add_edge(e.u + shift, e.v + shift);
    return g;
}

// Renumbers vertices to 0..n-1 preserving order.
inline Graph relabel_compact(const Graph& g) {
    Graph h(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        g.row(i).for_each([&](std::size_t j) {
            if (j > i) h.link(i, j);
        });
    return h;
}

}  // namespace ifpt
