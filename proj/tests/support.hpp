#pragma once

// Brute-force helpers shared by the unit tests and the acceptance binary.
// They deliberately avoid the library's search code and work on adjacency
// matrices of small graphs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <intervalfpt/graph.hpp>
#include <intervalfpt/oracle.hpp>

namespace ifpt::brute {

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) m[i][j] = g.linked(i, j);
    return m;
}

// Canonical code: lexicographically largest upper-triangle bit string over
// all vertex permutations.
inline std::vector<bool> canonical_code(const std::vector<std::vector<bool>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        code.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) code.push_back(m[perm[i]][perm[j]]);
        if (best.empty() || code > best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// One representative per isomorphism class on exactly n vertices, grown from
// the classes on n-1 vertices by adding a vertex with every neighbourhood.
inline std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
    if (n == 0) return {Graph(0)};
    std::vector<Graph> out;
    std::set<std::vector<bool>> seen;
    for (const auto& base : nonisomorphic_graphs(n - 1)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i + 1 < n; ++i)
                base.row(i).for_each([&](std::size_t j) { g.link(i, j); });
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (mask >> i & 1U) g.link(i, n - 1);
            if (seen.insert(canonical_code(matrix(g))).second) out.push_back(g);
        }
    }
    return out;
}

inline bool induces_cycle(const Graph& g, const std::vector<std::size_t>& s) {
    for (auto x : s) {
        std::size_t d = 0;
        for (auto y : s) d += g.linked(x, y);
        if (d != 2) return false;
    }
    // connected?
    std::vector<std::size_t> stack{s.front()};
    std::set<std::size_t> seen{s.front()};
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : s)
            if (g.linked(x, y) && seen.insert(y).second) stack.push_back(y);
    }
    return seen.size() == s.size();
}

// Cyclic order starting at the smallest vertex, smaller neighbour second.
inline std::vector<std::size_t> canonical_cycle(const Graph& g, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> seq{s.front()};
    std::vector<std::size_t> nb;
    for (auto y : s)
        if (g.linked(s.front(), y)) nb.push_back(y);
    std::size_t prev = s.front(), cur = std::min(nb[0], nb[1]);
    while (cur != s.front()) {
        seq.push_back(cur);
        for (auto y : s)
            if (y != prev && g.linked(cur, y)) {
                prev = cur;
                cur = y;
                break;
            }
    }
    return seq;
}

inline std::optional<std::vector<VertexId>> brute_shortest_hole(const Graph& g, std::size_t min_len) {
    for (std::size_t len = min_len; len <= g.order(); ++len) {
        std::optional<std::vector<std::size_t>> best;
        detail::for_each_combination(g.order(), len, [&](const std::vector<std::size_t>& pick) {
            if (induces_cycle(g, pick)) {
                auto seq = canonical_cycle(g, pick);
                if (!best || seq < *best) best = seq;
            }
            return false;
        });
        if (best) return g.to_ids(*best);
    }
    return std::nullopt;
}

inline bool brute_connected_avoiding(const std::vector<std::vector<bool>>& m, std::size_t x, std::size_t y,
                                     std::size_t z) {
    const std::size_t n = m.size();
    auto blocked = [&](std::size_t v) { return v == z || m[v][z]; };
    if (blocked(x) || blocked(y)) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (v == y) return true;
        for (std::size_t w = 0; w < n; ++w)
            if (m[v][w] && !seen[w] && !blocked(w)) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return false;
}

inline bool brute_has_at(const Graph& g) {
    auto m = matrix(g);
    const std::size_t n = m.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (m[a][b] || m[a][c] || m[b][c]) continue;
                if (brute_connected_avoiding(m, a, b, c) && brute_connected_avoiding(m, b, c, a) &&
                    brute_connected_avoiding(m, a, c, b))
                    return true;
            }
    return false;
}

inline bool brute_is_chordal(const Graph& g) { return !brute_shortest_hole(g, 4).has_value(); }

inline bool brute_minimal_obstruction(const Graph& g, const std::vector<std::size_t>& pick) {
    Bits keep(g.order());
    for (auto i : pick) keep.set(i);
    if (oracle_is_interval(induced_subgraph(g, keep), OracleLimits{32})) return false;
    for (auto i : pick) {
        Bits k2 = keep;
        k2.reset(i);
        if (!oracle_is_interval(induced_subgraph(g, k2), OracleLimits{32})) return false;
    }
    return true;
}

enum class SmallKind { None, Hole, AT };

// What find_small_obstruction must report: a hole of length 4..8 if any,
// else a minimal chordal obstruction on <= 10 vertices or the 11-vertex
// two-centre template (24 edges), else nothing.
inline SmallKind brute_small_obstruction(const Graph& g) {
    if (auto h = brute_shortest_hole(g, 4); h && h->size() <= 8) return SmallKind::Hole;
    for (std::size_t size = 6; size <= std::min<std::size_t>(11, g.order()); ++size) {
        bool found = false;
        detail::for_each_combination(g.order(), size, [&](const std::vector<std::size_t>& pick) {
            Bits keep(g.order());
            for (auto i : pick) keep.set(i);
            Graph h = induced_subgraph(g, keep);
            if (size == 11 && h.edge_count() != 24) return false;
            if (!brute_is_chordal(h)) return false;
            if (!brute_minimal_obstruction(g, pick)) return false;
            found = true;
            return true;
        });
        if (found) return SmallKind::AT;
    }
    return SmallKind::None;
}

}  // namespace ifpt::brute
