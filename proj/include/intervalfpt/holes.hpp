#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace ifpt {

namespace detail {

// Length of the shortest chordless cycle (>= 4) in g[allowed], or 0.
// For every induced path x-y-z the shortest x..z path avoiding N[y]
// closes the shortest hole through that path.
inline std::size_t shortest_hole_length(const Graph& g, const Bits& allowed) {
    std::size_t best = 0;
    allowed.for_each([&](std::size_t y) {
        Bits around = g.row(y) & allowed;
        Bits outside = allowed - g.closed_row(y);
        around.for_each([&](std::size_t x) {
            Bits src(g.order());
            src.set(x);
            Bits zone = outside;
            zone.set(x);
            auto dist = bfs_distances(g, src, zone);
            around.for_each([&](std::size_t z) {
                if (z <= x || g.linked(x, z)) return;
                int hop = -1;
                (g.row(z) & outside).for_each([&](std::size_t w) {
                    if (dist[w] >= 0 && (hop < 0 || dist[w] < hop)) hop = dist[w];
                });
                if (hop < 0) return;
                // y, x, (hop interior vertices), z
                std::size_t len = static_cast<std::size_t>(hop) + 3;
                if (best == 0 || len < best) best = len;
            });
        });
    });
    return best;
}

struct CycleSearch {
    const Graph& g;
    const Bits& allowed;
    std::size_t len;
    std::size_t start = 0;
    Bits above{};
    std::vector<int> to_close{};
    std::vector<std::size_t> path{};

    bool extend(const Bits& blocked) {
        const std::size_t j = path.size() - 1;
        const std::size_t last = path.back();
        const bool closing = path.size() + 1 == len;
        Bits cand = g.row(last) & above;
        cand -= blocked;
        if (j == 0) {
            // any neighbour of the start may follow
        } else if (closing) {
            cand &= g.row(start);
        } else {
            cand -= g.row(start);
        }
        for (std::size_t y = cand.first(); y < g.order(); y = cand.next(y + 1)) {
            if (closing && y <= path[1]) continue;
            if (!closing) {
                int remaining = static_cast<int>(len - path.size() - 1);
                if (to_close[y] < 0 || to_close[y] > remaining) continue;
            }
            Bits next_block = blocked;
            if (j >= 1) next_block |= g.closed_row(last);
            next_block.set(y);
            path.push_back(y);
            if (closing) return true;
            if (extend(next_block)) return true;
            path.pop_back();
        }
        return false;
    }

    std::optional<std::vector<std::size_t>> run() {
        for (std::size_t s = allowed.first(); s < g.order(); s = allowed.next(s + 1)) {
            start = s;
            above = allowed;
            for (std::size_t i = 0; i <= s; ++i) above.reset(i);
            Bits targets = g.row(s) & above;
            if (targets.count() < 2) continue;
            to_close = bfs_distances(g, targets, above);
            path.assign(1, s);
            Bits blocked(g.order());
            blocked.set(s);
            if (extend(blocked)) return path;
        }
        return std::nullopt;
    }
};

inline std::optional<std::vector<std::size_t>> cycle_of_length(const Graph& g, const Bits& allowed,
                                                                std::size_t len) {
    CycleSearch search{g, allowed, len, 0, {}, {}, {}};
    return search.run();
}

}  // namespace detail

// Shortest chordless cycle of length >= min_len inside g[allowed], as dense
// indices starting at its smallest vertex; among equally short cycles the
// lexicographically smallest sequence wins.
inline std::optional<std::vector<std::size_t>> chordless_cycle_at(const Graph& g, const Bits& allowed,
                                                                  std::size_t min_len = 4) {
    std::size_t shortest = detail::shortest_hole_length(g, allowed);
    if (shortest == 0) return std::nullopt;
    for (std::size_t len = std::max(shortest, min_len); len <= allowed.count(); ++len)
        if (auto c = detail::cycle_of_length(g, allowed, len)) return c;
    return std::nullopt;
}

inline std::optional<std::vector<VertexId>> find_chordless_cycle(const Graph& g, std::size_t min_len = 4) {
    if (min_len < 4) throw ContractViolation("chordless cycles have length >= 4");
    auto c = chordless_cycle_at(g, g.all_bits(), min_len);
    if (!c) return std::nullopt;
    return g.to_ids(*c);
}

// True iff `cycle` lists an induced cycle of g in order.
inline bool is_chordless_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
    const std::size_t p = cycle.size();
    if (p < 4) return false;
    std::vector<std::size_t> idx;
    for (auto v : cycle) {
        auto i = g.find(v);
        if (!i) return false;
        idx.push_back(*i);
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == p - 1);
            if (idx[i] == idx[j] || g.linked(idx[i], idx[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace ifpt
