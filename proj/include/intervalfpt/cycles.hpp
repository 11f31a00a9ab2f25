#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "holes.hpp"
#include "obstructions.hpp"
#include "oracle.hpp"
#include "recognition.hpp"

namespace ifpt {

// Holes shorter than this are small obstructions; the cycle machinery only
// sees longer ones.
inline constexpr std::size_t long_cycle_min = 9;

// Neighbourhood of a long hole v_0..v_{p-1}. Indices are taken mod p;
// single[i] sees only v_i, pair[i] exactly v_i and v_{i+1}, triple[i]
// exactly v_i, v_{i+1}, v_{i+2}.
struct CycleStructure {
    std::vector<VertexId> cycle;
    VertexSet dominating;
    std::vector<VertexSet> single, pair, triple;

    std::size_t p() const { return cycle.size(); }
    VertexId at(long i) const {
        long n = static_cast<long>(cycle.size());
        return cycle[static_cast<std::size_t>(((i % n) + n) % n)];
    }
};

inline CycleStructure classify_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
    if (cycle.size() < long_cycle_min || !is_chordless_cycle(g, cycle))
        throw ContractViolation("classify_cycle: need a chordless cycle of length >= 9");
    const std::size_t p = cycle.size();
    CycleStructure cs;
    cs.cycle = cycle;
    cs.single.resize(p);
    cs.pair.resize(p);
    cs.triple.resize(p);
    std::vector<std::size_t> idx;
    for (auto v : cycle) idx.push_back(g.index(v));
    Bits on_cycle = g.to_bits_range(cycle);
    Bits dom = g.all_bits() - on_cycle;
    for (auto i : idx) dom &= g.row(i);
    cs.dominating = g.to_set(dom);

    Bits around = open_neighborhood(g, on_cycle) - dom;
    around.for_each([&](std::size_t x) {
        std::vector<bool> hit(p);
        std::size_t count = 0;
        for (std::size_t i = 0; i < p; ++i)
            if (g.linked(x, idx[i])) {
                hit[i] = true;
                ++count;
            }
        // first position of the run, i.e. a hit whose predecessor is not hit
        std::size_t start = p;
        for (std::size_t i = 0; i < p; ++i)
            if (hit[i] && !hit[(i + p - 1) % p]) {
                start = i;
                break;
            }
        bool run = start < p && count <= 3;
        for (std::size_t j = 0; run && j < count; ++j) run = hit[(start + j) % p];
        if (!run)
            throw StructureViolation("vertex " + std::to_string(g.id(x)) + " sees " + std::to_string(count) +
                                     " cycle vertices that are not consecutive");
        VertexId v = g.id(x);
        (count == 1 ? cs.single : count == 2 ? cs.pair : cs.triple)[start].insert(v);
    });

    Bits closed = around | on_cycle;
    dom.for_each([&](std::size_t d) {
        if (!(closed - g.closed_row(d)).none())
            throw StructureViolation("cycle-dominating vertex " + std::to_string(g.id(d)) +
                                     " misses part of the cycle neighbourhood");
    });
    return cs;
}

// N[C] minus the dominating vertices, as dense indices of g.
inline Bits cycle_zone(const Graph& g, const CycleStructure& cs) {
    Bits on_cycle = g.to_bits_range(cs.cycle);
    return (open_neighborhood(g, on_cycle) | on_cycle) - g.to_bits(cs.dominating);
}

// No N(v_i) minus the cycle contains a hole.
inline bool is_clean(const Graph& g, const CycleStructure& cs) {
    Bits on_cycle = g.to_bits_range(cs.cycle);
    for (auto v : cs.cycle)
        if (!detail::chordal_fast(induced_subgraph(g, g.row(g.index(v)) - on_cycle))) return false;
    return true;
}

// Asteroidal template of any size, or a long claw or whipping top. The
// cycle itself always carries an asteroidal triple, so ripeness asks for
// these shapes rather than for a bare triple.
inline bool has_at_template(const Graph& h) {
    return find_min_template(h, 1, h.order()).has_value() || detail::find_long_claw(h).has_value() ||
           detail::find_whipping_top(h).has_value();
}

inline bool is_ripe(const Graph& g, const CycleStructure& cs) {
    return is_clean(g, cs) && !has_at_template(induced_subgraph(g, cycle_zone(g, cs)));
}

// Shortest hole, then keep moving into a hole inside some N(v_i) - V(C)
// until none is left.
inline std::optional<CycleStructure> find_clean_cycle(const Graph& g) {
    auto start = chordless_cycle_at(g, g.all_bits(), 4);
    if (!start) return std::nullopt;
    if (start->size() < long_cycle_min)
        throw StructureViolation("find_clean_cycle: hole of length " + std::to_string(start->size()));
    std::vector<VertexId> cycle = g.to_ids(*start);
    for (std::size_t step = 0; step <= g.order(); ++step) {
        CycleStructure cs = classify_cycle(g, cycle);
        Bits on_cycle = g.to_bits_range(cycle);
        std::optional<std::vector<std::size_t>> inside;
        for (auto v : cycle) {
            inside = chordless_cycle_at(g, g.row(g.index(v)) - on_cycle, 4);
            if (inside) break;
        }
        if (!inside) return cs;
        if (inside->size() < long_cycle_min)
            throw StructureViolation("find_clean_cycle: hole of length " + std::to_string(inside->size()) +
                                     " next to the cycle");
        cycle = g.to_ids(*inside);
    }
    throw StructureViolation("find_clean_cycle: descent did not settle");
}

// Smallest X inside N[C] - D(C) whose removal leaves that zone chordal;
// lexicographically first among the smallest. Holes are collected lazily
// and every candidate set is first checked against the ones seen so far.
inline VertexSet min_cycle_separator(const Graph& g, const CycleStructure& cs) {
    Bits zone = cycle_zone(g, cs);
    std::vector<std::size_t> cand;
    zone.for_each([&](std::size_t i) { cand.push_back(i); });
    std::vector<Bits> holes;
    for (std::size_t size = 0; size <= cand.size(); ++size) {
        std::optional<VertexSet> found;
        detail::for_each_combination(cand.size(), size, [&](const std::vector<std::size_t>& pick) {
            Bits x(g.order());
            for (auto i : pick) x.set(cand[i]);
            for (const auto& h : holes)
                if (!h.intersects(x)) return false;
            auto hole = chordless_cycle_at(g, zone - x, 4);
            if (!hole) {
                found = g.to_set(x);
                return true;
            }
            Bits hb(g.order());
            for (auto i : *hole) hb.set(i);
            holes.push_back(std::move(hb));
            return false;
        });
        if (found) return *found;
    }
    throw StructureViolation("min_cycle_separator: zone stays non-chordal");
}

}  // namespace ifpt
