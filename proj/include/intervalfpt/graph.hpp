#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace ifpt {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

// Simple undirected graph. Vertices carry stable ids; internally they are
// addressed by a dense index in ascending id order, so index order and id
// order agree.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1, no edges.
    explicit Graph(std::size_t n) : ids_(n), adj_(n, Bits(n)) {
        for (std::size_t i = 0; i < n; ++i) ids_[i] = static_cast<VertexId>(i);
    }

    explicit Graph(std::vector<VertexId> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
            throw ContractViolation("duplicate vertex id");
        adj_.assign(ids_.size(), Bits(ids_.size()));
    }

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const auto& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    std::size_t order() const { return ids_.size(); }
    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& row : adj_) m += row.count();
        return m / 2;
    }

    VertexId id(std::size_t i) const { return ids_[i]; }
    const std::vector<VertexId>& ids() const { return ids_; }

    std::optional<std::size_t> find(VertexId v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - ids_.begin());
    }
    std::size_t index(VertexId v) const {
        auto i = find(v);
        if (!i) throw ContractViolation("unknown vertex " + std::to_string(v));
        return *i;
    }
    bool has_vertex(VertexId v) const { return find(v).has_value(); }

    const Bits& row(std::size_t i) const { return adj_[i]; }
    bool linked(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
    std::size_t degree_at(std::size_t i) const { return adj_[i].count(); }

    bool adjacent(VertexId a, VertexId b) const {
        auto i = find(a), j = find(b);
        return i && j && adj_[*i].test(*j);
    }

    void add_edge(VertexId a, VertexId b) {
        if (a == b) throw ContractViolation("self-loop on " + std::to_string(a));
        link(index(a), index(b));
    }
    void link(std::size_t i, std::size_t j) {
        adj_[i].set(j);
        adj_[j].set(i);
    }

    Bits empty_bits() const { return Bits(order()); }
    Bits all_bits() const {
        Bits b(order());
        b.fill();
        return b;
    }
    Bits closed_row(std::size_t i) const {
        Bits b = adj_[i];
        b.set(i);
        return b;
    }

    VertexSet vertices() const { return VertexSet(ids_.begin(), ids_.end()); }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < order(); ++i)
            adj_[i].for_each([&](std::size_t j) {
                if (j > i) out.emplace_back(ids_[i], ids_[j]);
            });
        return out;
    }
    VertexSet neighbors(VertexId v) const { return to_set(adj_[index(v)]); }

    Bits to_bits(const VertexSet& s) const {
        Bits b(order());
        for (auto v : s) b.set(index(v));
        return b;
    }
    template <class Range>
    Bits to_bits_range(const Range& r) const {
        Bits b(order());
        for (auto v : r) b.set(index(v));
        return b;
    }
    VertexSet to_set(const Bits& b) const {
        VertexSet s;
        b.for_each([&](std::size_t i) { s.insert(ids_[i]); });
        return s;
    }
    std::vector<VertexId> to_ids(const std::vector<std::size_t>& idx) const {
        std::vector<VertexId> out;
        out.reserve(idx.size());
        for (auto i : idx) out.push_back(ids_[i]);
        return out;
    }

    bool operator==(const Graph& o) const = default;

    // Identity of (vertex ids, adjacency); used as a memo key.
    std::string fingerprint() const {
        std::string key;
        key.reserve(ids_.size() * 4 + order() * order() / 8 + 8);
        for (auto v : ids_) key.append(reinterpret_cast<const char*>(&v), sizeof v);
        key.push_back('|');
        for (std::size_t i = 0; i < order(); ++i) {
            unsigned char acc = 0;
            int fill = 0;
            for (std::size_t j = i + 1; j < order(); ++j) {
                acc = static_cast<unsigned char>((acc << 1) | (adj_[i].test(j) ? 1 : 0));
                if (++fill == 8) {
                    key.push_back(static_cast<char>(acc));
                    acc = 0;
                    fill = 0;
                }
            }
            if (fill) key.push_back(static_cast<char>(acc));
        }
        return key;
    }

private:
    std::vector<VertexId> ids_;
    std::vector<Bits> adj_;
};

inline Graph induced_subgraph(const Graph& g, const Bits& keep) {
    std::vector<std::size_t> idx = keep.members();
    std::vector<VertexId> ids;
    ids.reserve(idx.size());
    for (auto i : idx) ids.push_back(g.id(i));
    Graph h(std::move(ids));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (g.linked(idx[a], idx[b])) h.link(a, b);
    return h;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    return induced_subgraph(g, g.to_bits(keep));
}

inline Graph remove_vertices(const Graph& g, const VertexSet& drop) {
    return induced_subgraph(g, g.all_bits() - g.to_bits(drop));
}

// Every pair must be a current non-edge between existing vertices.
inline Graph add_edges(const Graph& g, const EdgeSet& fill) {
    Graph h = g;
    for (const auto& e : fill) {
        if (e.u == e.v) throw ContractViolation("self-loop in fill set");
        auto i = h.index(e.u), j = h.index(e.v);
        if (h.linked(i, j))
            throw ContractViolation("fill edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " already present");
        h.link(i, j);
    }
    return h;
}

inline Bits open_neighborhood(const Graph& g, const Bits& s) {
    Bits out(g.order());
    s.for_each([&](std::size_t i) { out |= g.row(i); });
    return out - s;
}

inline VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
    Bits b = g.to_bits(s);
    Bits n = open_neighborhood(g, b);
    if (closed) n |= b;
    return g.to_set(n);
}

inline bool is_clique(const Graph& g, const Bits& s) {
    bool ok = true;
    s.for_each([&](std::size_t i) {
        Bits rest = s;
        rest.reset(i);
        if (!rest.subset_of(g.row(i))) ok = false;
    });
    return ok;
}

// Connected-component labels of g[allowed]; -1 outside allowed.
inline std::vector<int> component_labels(const Graph& g, const Bits& allowed) {
    std::vector<int> label(g.order(), -1);
    int next = 0;
    Bits unseen = allowed;
    for (std::size_t s = unseen.first(); s < g.order(); s = unseen.first()) {
        Bits frontier(g.order());
        frontier.set(s);
        unseen.reset(s);
        while (frontier.any()) {
            Bits grow(g.order());
            frontier.for_each([&](std::size_t i) {
                label[i] = next;
                grow |= g.row(i);
            });
            grow &= unseen;
            unseen -= grow;
            frontier = grow;
        }
        ++next;
    }
    return label;
}

// BFS distances inside g[allowed] from a source set; -1 if unreachable.
inline std::vector<int> bfs_distances(const Graph& g, const Bits& sources, const Bits& allowed,
                                      int limit = -1) {
    std::vector<int> dist(g.order(), -1);
    Bits seen = sources & allowed;
    Bits frontier = seen;
    int d = 0;
    while (frontier.any()) {
        frontier.for_each([&](std::size_t i) { dist[i] = d; });
        if (limit >= 0 && d == limit) break;
        Bits grow(g.order());
        frontier.for_each([&](std::size_t i) { grow |= g.row(i); });
        grow &= allowed;
        grow -= seen;
        seen |= grow;
        frontier = grow;
        ++d;
    }
    return dist;
}

// Lexicographically smallest shortest path from s to t inside g[allowed]
// (both endpoints must be allowed). Empty if none.
inline std::vector<std::size_t> shortest_path(const Graph& g, std::size_t s, std::size_t t,
                                              const Bits& allowed) {
    Bits src(g.order());
    src.set(t);
    auto dist = bfs_distances(g, src, allowed);
    if (!allowed.test(s) || dist[s] < 0) return {};
    std::vector<std::size_t> path{s};
    std::size_t cur = s;
    while (cur != t) {
        std::size_t step = g.order();
        (g.row(cur) & allowed).for_each([&](std::size_t j) {
            if (step == g.order() && dist[j] == dist[cur] - 1) step = j;
        });
        cur = step;
        path.push_back(cur);
    }
    return path;
}

}  // namespace ifpt
