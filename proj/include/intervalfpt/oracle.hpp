#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

// Reference answers by exhaustive search. Nothing here shares code with the
// recognition or solver headers beyond the graph container.

namespace ifpt {

struct OracleLimits {
    std::size_t max_vertices = 10;        // oracle_is_interval guard
    std::uint64_t max_subsets = 20'000'000;  // brute-force enumeration guard
};

namespace detail {

inline void maximal_cliques(const Graph& g, Bits r, Bits p, Bits x, std::vector<Bits>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    for (std::size_t v = p.first(); v < g.order(); v = p.first()) {
        Bits r2 = r;
        r2.set(v);
        maximal_cliques(g, r2, p & g.row(v), x & g.row(v), out);
        p.reset(v);
        x.set(v);
    }
}

// Arranges cliques so that each vertex occupies a consecutive run.
class CliqueArrangement {
public:
    CliqueArrangement(const Graph& g, std::vector<Bits> cliques) : g_(g), cliques_(std::move(cliques)) {
        remaining_.assign(g.order(), 0);
        for (const auto& q : cliques_) q.for_each([&](std::size_t v) { ++remaining_[v]; });
        used_.assign(cliques_.size(), 0);
        seen_ = Bits(g.order());
    }

    bool solve() { return place(cliques_.size(), 0); }

private:
    std::string key(std::size_t last) const {
        std::string k(used_.begin(), used_.end());
        k += std::to_string(last);
        return k;
    }

    bool place(std::size_t last, std::size_t depth) {
        if (depth == cliques_.size()) return true;
        std::string k = key(last);
        if (dead_.count(k)) return false;
        for (std::size_t q = 0; q < cliques_.size(); ++q) {
            if (used_[q]) continue;
            const Bits& next = cliques_[q];
            // a vertex seen before may continue only if it is in the last clique
            Bits reopened = next & seen_;
            if (last < cliques_.size()) reopened -= cliques_[last];
            if (reopened.any()) continue;
            // vertices leaving the run must have no clique left
            bool closes = true;
            if (last < cliques_.size())
                (cliques_[last] - next).for_each([&](std::size_t v) {
                    if (remaining_[v] > 0) closes = false;
                });
            if (!closes) continue;

            Bits before = seen_;
            used_[q] = 1;
            seen_ |= next;
            next.for_each([&](std::size_t v) { --remaining_[v]; });
            bool ok = place(q, depth + 1);
            next.for_each([&](std::size_t v) { ++remaining_[v]; });
            seen_ = before;
            used_[q] = 0;
            if (ok) return true;
        }
        dead_.insert(k);
        return false;
    }

    const Graph& g_;
    std::vector<Bits> cliques_;
    std::vector<int> remaining_;
    std::vector<char> used_;
    Bits seen_;
    std::unordered_set<std::string> dead_;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Calls f on each k-subset of {0..n-1} in lexicographic order until f returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return false;
    while (true) {
        if (f(pick)) return true;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace detail

// Interval test by consecutive arrangement of maximal cliques.
inline bool oracle_is_interval(const Graph& g, const OracleLimits& limits = {}) {
    if (g.order() > limits.max_vertices)
        throw WorkBoundExceeded("oracle_is_interval: " + std::to_string(g.order()) + " vertices exceeds bound " +
                                std::to_string(limits.max_vertices));
    if (g.order() == 0) return true;
    std::vector<Bits> cliques;
    detail::maximal_cliques(g, Bits(g.order()), g.all_bits(), Bits(g.order()), cliques);
    return detail::CliqueArrangement(g, std::move(cliques)).solve();
}

struct DeletionOptimum {
    std::size_t size = 0;
    VertexSet witness;
};

struct CompletionOptimum {
    std::size_t size = 0;
    EdgeSet witness;
};

// Smallest vertex set whose removal leaves an interval graph, scanning sizes
// upward and subsets lexicographically. Empty optional if the optimum
// exceeds max_k.
inline std::optional<DeletionOptimum> brute_force_min_deletion(const Graph& g, std::size_t max_k,
                                                               const OracleLimits& limits = {}) {
    const std::size_t n = g.order();
    std::uint64_t work = 0;
    for (std::size_t s = 0; s <= std::min(max_k, n); ++s) work += detail::binomial(n, s);
    if (work > limits.max_subsets)
        throw WorkBoundExceeded("brute_force_min_deletion: " + std::to_string(work) + " subsets");
    OracleLimits inner = limits;
    inner.max_vertices = std::max<std::size_t>(limits.max_vertices, n);
    std::optional<DeletionOptimum> best;
    for (std::size_t s = 0; s <= std::min(max_k, n) && !best; ++s) {
        detail::for_each_combination(n, s, [&](const std::vector<std::size_t>& pick) {
            Bits keep = g.all_bits();
            for (auto i : pick) keep.reset(i);
            if (!oracle_is_interval(induced_subgraph(g, keep), inner)) return false;
            DeletionOptimum d;
            d.size = s;
            for (auto i : pick) d.witness.insert(g.id(i));
            best = d;
            return true;
        });
    }
    return best;
}

// Smallest set of non-edges whose addition yields an interval graph.
inline std::optional<CompletionOptimum> brute_force_min_completion(const Graph& g, std::size_t max_k,
                                                                   const OracleLimits& limits = {}) {
    const std::size_t n = g.order();
    std::vector<std::pair<std::size_t, std::size_t>> holes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.linked(i, j)) holes.emplace_back(i, j);
    std::uint64_t work = 0;
    for (std::size_t s = 0; s <= std::min(max_k, holes.size()); ++s) work += detail::binomial(holes.size(), s);
    if (work > limits.max_subsets)
        throw WorkBoundExceeded("brute_force_min_completion: " + std::to_string(work) + " subsets");
    OracleLimits inner = limits;
    inner.max_vertices = std::max<std::size_t>(limits.max_vertices, n);
    std::optional<CompletionOptimum> best;
    for (std::size_t s = 0; s <= std::min(max_k, holes.size()) && !best; ++s) {
        detail::for_each_combination(holes.size(), s, [&](const std::vector<std::size_t>& pick) {
            Graph h = g;
            for (auto i : pick) h.link(holes[i].first, holes[i].second);
            if (!oracle_is_interval(h, inner)) return false;
            CompletionOptimum c;
            c.size = s;
            for (auto i : pick) c.witness.emplace(g.id(holes[i].first), g.id(holes[i].second));
            best = c;
            return true;
        });
    }
    return best;
}

}  // namespace ifpt
