#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace ifpt {

// What a search node branched on.
enum class NodeKind { SmallObstruction, BigAT, Hole, Cycle, CycleLocal };
inline constexpr std::size_t node_kind_count = 5;

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::SmallObstruction: return "small_obstruction";
        case NodeKind::BigAT: return "big_at";
        case NodeKind::Hole: return "hole";
        case NodeKind::Cycle: return "cycle";
        case NodeKind::CycleLocal: return "cycle_local";
    }
    return "?";
}

// Degrees count every branch a node lists, including ones the remaining
// budget prunes.
struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
    std::size_t max_degree = 0;
    std::array<std::uint64_t, node_kind_count> branch_nodes{};
    std::array<std::size_t, node_kind_count> max_degree_by_kind{};
    std::uint64_t memo_hits = 0;
    double elapsed_ms = 0;

    void record(NodeKind kind, std::size_t degree) {
        auto i = static_cast<std::size_t>(kind);
        ++branch_nodes[i];
        max_degree_by_kind[i] = std::max(max_degree_by_kind[i], degree);
        max_degree = std::max(max_degree, degree);
    }
    std::size_t degree(NodeKind kind) const { return max_degree_by_kind[static_cast<std::size_t>(kind)]; }

    void merge(const SearchStats& o) {
        nodes += o.nodes;
        max_depth = std::max(max_depth, o.max_depth);
        max_degree = std::max(max_degree, o.max_degree);
        for (std::size_t i = 0; i < node_kind_count; ++i) {
            branch_nodes[i] += o.branch_nodes[i];
            max_degree_by_kind[i] = std::max(max_degree_by_kind[i], o.max_degree_by_kind[i]);
        }
        memo_hits += o.memo_hits;
    }
};

struct SolveOptions {
    bool memo = true;
    // Explore the root's branches on separate threads; the committed answer
    // is still the first Yes in branch order.
    bool parallel = false;
};

template <class Solution>
struct SolveResult {
    std::optional<Solution> solution;
    SearchStats stats;
    bool yes() const { return solution.has_value(); }
};

namespace detail {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Thrown inside a speculative branch once an earlier branch has committed.
struct Cancelled {};

// Shared between the root's speculative branches: index of the earliest
// branch known to succeed.
struct Commitment {
    std::atomic<std::size_t> best{SIZE_MAX};
    void offer(std::size_t i) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    }
};

}  // namespace detail

}  // namespace ifpt
