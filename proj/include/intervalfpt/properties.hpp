#pragma once

// Randomised checks of the structural facts the solvers lean on. Each check
// looks only at a graph, so a failing instance can be shrunk by deleting
// vertices while the failure persists.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "completion.hpp"
#include "cycles.hpp"
#include "generators.hpp"
#include "structure.hpp"

namespace ifpt {

using PropertyCheck = std::function<std::optional<std::string>(const Graph&)>;

struct NamedCheck {
    std::string name;
    PropertyCheck check;
};

struct PropertyFailure {
    std::string property;
    std::string instance;  // generator description
    std::string message;
    Graph graph;      // as generated
    Graph minimized;  // vertex-minimal graph still failing the same check
};

struct SuiteReport {
    std::string suite;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t rejected = 0;  // samples discarded by the generator filter
    std::vector<PropertyFailure> failures;
    bool passed() const { return failures.empty(); }
};

namespace detail {

// Runs a check, turning structural exceptions into failures.
inline std::optional<std::string> guarded(const PropertyCheck& c, const Graph& g) {
    try {
        return c(g);
    } catch (const StructureViolation& e) {
        return std::string("StructureViolation: ") + e.what();
    } catch (const ContractViolation& e) {
        return std::string("ContractViolation: ") + e.what();
    } catch (const NoSeparator& e) {
        return std::string("NoSeparator: ") + e.what();
    }
}

// Drops vertices one at a time as long as the check keeps failing with the
// same message.
inline Graph minimize_failure(const Graph& g, const PropertyCheck& c, const std::string& message) {
    Graph cur = g;
    for (auto v : g.ids()) {
        if (!cur.has_vertex(v)) continue;
        Graph trial = remove_vertices(cur, {v});
        if (guarded(c, trial) == message) cur = std::move(trial);
    }
    return cur;
}

// Preconditions of the AT machinery, as a StructureViolation when broken.
inline void require_at_host(const Graph& g) {
    if (!chordal_fast(g)) throw StructureViolation("host is not chordal");
    if (auto o = find_small_obstruction(g)) throw StructureViolation("host has a small obstruction (" + o->family + ")");
}

inline void require_cycle_host(const Graph& g) {
    if (auto o = find_small_obstruction(g)) throw StructureViolation("host has a small obstruction (" + o->family + ")");
}

inline std::string ids(const VertexSet& s) {
    std::string out = "{";
    for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

// ---- generators --------------------------------------------------------

// Gadget plus extra vertices placed the way the neighbourhood of a minimum
// AT is allowed to look: further dominating vertices, vertices on 1-3
// consecutive path positions, second shallow vertices, and tails from the
// centre to a or b.
inline Graph decorate_gadget(const Gadget& gad, Rng& rng, std::size_t extras) {
    const BigAT& at = gad.at;
    const std::size_t p = at.p();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : gad.graph.edges()) edges.emplace_back(e.u, e.v);
    VertexId next = static_cast<VertexId>(gad.graph.order());
    std::vector<VertexId> dom{at.u};
    if (at.w) dom.push_back(*at.w);
    std::vector<VertexId> c_side{at.c};
    std::vector<std::pair<VertexId, std::size_t>> placed;  // family vertex, first position
    std::uniform_int_distribution<int> kind_pick(0, 9);
    for (std::size_t e = 0; e < extras; ++e) {
        int kind = kind_pick(rng);
        VertexId x = next++;
        if (kind == 0) {
            // dominating: sees the path, c's side, the other dominators and
            // every placed vertex on positions 2..p-1
            for (std::size_t i = 1; i <= p; ++i) edges.emplace_back(x, at.at(i));
            for (auto y : c_side) edges.emplace_back(x, y);
            for (auto y : dom) edges.emplace_back(x, y);
            for (auto [y, s] : placed) edges.emplace_back(x, y);
            dom.push_back(x);
        } else if (kind == 1) {
            edges.emplace_back(x, at.c);
            for (auto y : dom) edges.emplace_back(x, y);
            c_side.push_back(x);
        } else if (kind == 2) {
            // tail u - x - y - a (or towards b) through v1 (vp)
            bool at_a = std::bernoulli_distribution(0.5)(rng);
            VertexId end = at_a ? at.a : at.b, near = at_a ? at.at(1) : at.at(p);
            VertexId y = next++;
            for (auto d : dom) edges.emplace_back(x, d);
            edges.emplace_back(x, near);
            edges.emplace_back(y, x);
            edges.emplace_back(y, near);
            edges.emplace_back(y, end);
        } else {
            std::size_t span = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            std::size_t start = std::uniform_int_distribution<std::size_t>(1, p + 1 - span)(rng);
            bool deep = false;
            for (std::size_t i = start; i < start + span; ++i) {
                edges.emplace_back(x, at.at(i));
                deep = deep || (i >= 2 && i + 1 <= p);
            }
            if (deep || at.kind == ATKind::Type2)
                for (auto d : dom) edges.emplace_back(x, d);
            // sometimes join an earlier vertex on the same positions
            for (auto [y, s] : placed)
                if (s == start && std::bernoulli_distribution(0.5)(rng)) edges.emplace_back(x, y);
            placed.emplace_back(x, start);
        }
    }
    Graph g(next);
    for (auto [x, y] : edges)
        if (!g.adjacent(x, y)) g.add_edge(x, y);
    return g;
}

struct Sample {
    Graph graph;
    std::string description;
    std::size_t levels = 1;  // nested templates built in
};

inline std::optional<Sample> sample_at_host(Rng& rng, std::size_t round, bool corrupt) {
    Sample s;
    if (round % 4 == 3) {
        std::size_t levels = 1 + round / 4 % 3;
        std::size_t base = 7 + round % 2;
        s.graph = make_nested_gadget(levels, base).graph;
        s.levels = levels;
        s.description = "nested-gadget levels=" + std::to_string(levels) + " p=" + std::to_string(base);
    } else if (round % 8 == 5) {
        // two templates side by side; the longer one outlives fixes to the other
        std::size_t p = std::uniform_int_distribution<std::size_t>(13, 15)(rng);
        Graph first = decorate_gadget(make_gadget(ATKind::Type1, p), rng, 4);
        Graph second = decorate_gadget(make_gadget(ATKind::Type2, p + 1), rng, 4);
        s.graph = disjoint_union(first, second);
        s.description = "gadget-type1 p=" + std::to_string(p) + " beside gadget-type2 p=" + std::to_string(p + 1);
    } else {
        ATKind kind = round % 2 ? ATKind::Type2 : ATKind::Type1;
        std::size_t p = std::uniform_int_distribution<std::size_t>(7, 15)(rng);
        std::size_t extras = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
        s.graph = decorate_gadget(make_gadget(kind, p), rng, extras);
        s.description = std::string("gadget-") + to_string(kind) + " p=" + std::to_string(p) + " extras=" +
                        std::to_string(extras);
    }
    if (corrupt) {
        // drop one centre-to-path edge of the outermost template
        auto edges = s.graph.edges();
        Graph g = Graph(s.graph.order());
        bool dropped = false;
        for (const auto& e : edges) {
            if (!dropped && e.u == 3 && e.v > 8) {
                dropped = true;
                continue;
            }
            g.add_edge(e.u, e.v);
        }
        s.graph = std::move(g);
        s.description += " corrupted";
        return s;
    }
    if (!chordal_fast(s.graph) || find_small_obstruction(s.graph) || !find_minimum_big_at(s.graph)) return std::nullopt;
    return s;
}

// Long hole with neighbourhood decorations: cycle-dominating vertices,
// vertices on 1-3 consecutive cycle positions, and now and then a second
// long hole living on one position or one pair of positions.
inline std::optional<Sample> sample_cycle_host(Rng& rng, std::size_t round, bool corrupt) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(9, 13)(rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < len; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % len));
    VertexId next = static_cast<VertexId>(len);
    std::vector<VertexId> around;
    std::vector<std::pair<VertexId, std::size_t>> placed;
    std::size_t extras = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    std::string desc = "long-cycle L=" + std::to_string(len);
    if (round % 3 == 2) {
        // inner hole on positions {i} or {i, i+1}
        std::size_t ilen = std::uniform_int_distribution<std::size_t>(9, 10)(rng);
        std::size_t pos = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
        bool two = std::bernoulli_distribution(0.5)(rng);
        VertexId first = next;
        for (std::size_t j = 0; j < ilen; ++j) {
            VertexId x = next++;
            edges.emplace_back(x, static_cast<VertexId>(pos));
            if (two) edges.emplace_back(x, static_cast<VertexId>((pos + 1) % len));
            edges.emplace_back(x, static_cast<VertexId>(first + (j + 1) % ilen));
            around.push_back(x);
        }
        desc += std::string(" inner-hole=") + std::to_string(ilen) + (two ? " on pair " : " on single ") +
                std::to_string(pos);
    }
    for (std::size_t e = 0; e < extras; ++e) {
        VertexId x = next++;
        std::size_t span = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::size_t start = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
        for (std::size_t j = 0; j < span; ++j) edges.emplace_back(x, static_cast<VertexId>((start + j) % len));
        for (auto [y, s] : placed)
            if (s == start && std::bernoulli_distribution(0.4)(rng)) edges.emplace_back(x, y);
        placed.emplace_back(x, start);
        around.push_back(x);
    }
    desc += " extras=" + std::to_string(extras);
    std::size_t apexes = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<VertexId> apex;
    for (std::size_t a = 0; a < apexes; ++a) {
        VertexId x = next++;
        for (std::size_t i = 0; i < len; ++i) edges.emplace_back(x, static_cast<VertexId>(i));
        for (auto y : around) edges.emplace_back(x, y);
        for (auto y : apex) edges.emplace_back(x, y);
        apex.push_back(x);
    }
    desc += " apexes=" + std::to_string(apexes);
    // vertices off the cycle's neighbourhood, hanging from the apexes and
    // sometimes one more vertex
    std::size_t far = apexes ? std::uniform_int_distribution<std::size_t>(0, 2)(rng) : 0;
    for (std::size_t f = 0; f < far; ++f) {
        VertexId x = next++;
        for (auto y : apex) edges.emplace_back(x, y);
        if (!around.empty() && std::bernoulli_distribution(0.5)(rng))
            edges.emplace_back(x, around[std::uniform_int_distribution<std::size_t>(0, around.size() - 1)(rng)]);
    }
    desc += " far=" + std::to_string(far);
    Graph g(next);
    for (auto [x, y] : edges)
        if (!g.adjacent(x, y)) g.add_edge(x, y);
    if (corrupt) {
        // a chord v0-v4 leaves a 5-hole
        g.add_edge(0, 4);
        return Sample{std::move(g), desc + " corrupted", 1};
    }
    if (find_small_obstruction(g)) return std::nullopt;
    return Sample{std::move(g), desc, 1};
}

// ---- structure checks --------------------------------------------------

inline ATContext min_context(const Graph& g) {
    require_at_host(g);
    auto at = find_minimum_big_at(g);
    if (!at) throw StructureViolation("no big AT in a non-interval host");
    return build_context(g, *at);
}

inline std::vector<NamedCheck> structure_checks(std::size_t levels) {
    std::vector<NamedCheck> out;
    out.push_back({"template-is-induced", [](const Graph& g) -> std::optional<std::string> {
                       require_at_host(g);
                       auto at = find_minimum_big_at(g);
                       if (!at) return "no big AT found";
                       if (!matches_template(g, *at)) return "returned AT is not an induced template";
                       return std::nullopt;
                   }});
    out.push_back({"c-neighbours-see-centres", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       const BigAT& at = ctx.at;
                       VertexSet tv = at.vertices();
                       for (auto x : g.neighbors(at.c)) {
                           if (tv.count(x)) continue;
                           if (!g.adjacent(x, at.u) || (at.w && !g.adjacent(x, *at.w)))
                               return "neighbour " + std::to_string(x) + " of c misses a centre";
                       }
                       return std::nullopt;
                   }});
    out.push_back({"c-neighbour-on-path-dominates", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       const BigAT& at = ctx.at;
                       for (auto x : g.neighbors(at.c)) {
                           if (at.vertices().count(x)) continue;
                           bool touches = false;
                           for (std::size_t i = 0; i <= at.p() + 1; ++i) touches = touches || g.adjacent(x, at.at(i));
                           if (touches && !ctx.dominating.count(x))
                               return "vertex " + std::to_string(x) + " sees c and the path but is not dominating";
                       }
                       return std::nullopt;
                   }});
    out.push_back({"three-consecutive-path-neighbours", [](const Graph& g) -> std::optional<std::string> {
                       min_context(g);  // build_context enforces it
                       return std::nullopt;
                   }});
    out.push_back({"dominating-clique-sees-c-side", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       for (auto d : ctx.dominating) {
                           if (!g.adjacent(d, ctx.at.c)) return "dominating " + std::to_string(d) + " misses c";
                           for (auto e : ctx.dominating)
                               if (d < e && !g.adjacent(d, e)) return "dominating set is not a clique";
                           for (auto x : g.neighbors(ctx.at.c))
                               if (x != d && !g.adjacent(x, d))
                                   return "neighbour " + std::to_string(x) + " of c misses dominating " + std::to_string(d);
                       }
                       return std::nullopt;
                   }});
    out.push_back({"inner-sees-dominating", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       for (auto x : ctx.inner_vertices)
                           for (auto d : ctx.dominating)
                               if (x != d && !g.adjacent(x, d))
                                   return "inner vertex " + std::to_string(x) + " misses dominating " + std::to_string(d);
                       return std::nullopt;
                   }});
    out.push_back({"boundary-separates-inner", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       VertexSet wall = ctx.dominating;
                       wall.insert(ctx.boundary_b.begin(), ctx.boundary_b.end());
                       wall.insert(ctx.boundary_e.begin(), ctx.boundary_e.end());
                       for (auto x : ctx.inner_vertices) {
                           if (wall.count(x)) continue;
                           for (auto y : g.neighbors(x))
                               if (!wall.count(y) && !ctx.inner_vertices.count(y))
                                   return "edge " + std::to_string(x) + "-" + std::to_string(y) + " leaves the inner region";
                       }
                       return std::nullopt;
                   }});
    out.push_back({"inner-at-dominated-by-path-vertex", [](const Graph& g) -> std::optional<std::string> {
                       auto ctx = min_context(g);
                       auto inner_at = find_minimum_big_at(ctx.inner);
                       if (!inner_at) return std::nullopt;
                       for (std::size_t i = 2; i + 1 <= ctx.at.p(); ++i) {
                           VertexId v = ctx.at.at(i);
                           bool all = true;
                           for (auto x : inner_at->path) all = all && x != v && g.adjacent(v, x);
                           if (all) return std::nullopt;
                       }
                       return std::string("no path vertex dominates the inner AT");
                   }});
    out.push_back({"descent-terminates", [levels](const Graph& g) -> std::optional<std::string> {
                       require_at_host(g);
                       auto r = find_ripe_at(g, static_cast<int>(g.order()));
                       if (!std::holds_alternative<RipeAT>(r)) return "descent gave up";
                       auto depth = std::get<RipeAT>(r).depth;
                       if (depth + 1 > levels)
                           return "descent depth " + std::to_string(depth) + " exceeds the " + std::to_string(levels) +
                                  " nested templates";
                       return std::nullopt;
                   }});
    return out;
}

// ---- cycle checks ------------------------------------------------------

inline CycleStructure shortest_cycle_structure(const Graph& g) {
    require_cycle_host(g);
    auto c = find_chordless_cycle(g, 4);
    if (!c) throw StructureViolation("no hole in a cycle host");
    return classify_cycle(g, *c);
}

inline std::vector<NamedCheck> cycle_checks() {
    std::vector<NamedCheck> out;
    out.push_back({"cycle-neighbours-consecutive", [](const Graph& g) -> std::optional<std::string> {
                       shortest_cycle_structure(g);  // classify_cycle enforces it
                       return std::nullopt;
                   }});
    out.push_back({"outside-vertex-trichotomy", [](const Graph& g) -> std::optional<std::string> {
                       auto cs = shortest_cycle_structure(g);
                       Bits on_cycle = g.to_bits_range(cs.cycle);
                       Bits dom = g.to_bits(cs.dominating);
                       Bits open = g.all_bits() - dom;
                       Bits reach = g.empty_bits();
                       auto label = component_labels(g, open);
                       on_cycle.for_each([&](std::size_t i) {
                           for (std::size_t j = 0; j < g.order(); ++j)
                               if (label[j] >= 0 && label[j] == label[i]) reach.set(j);
                       });
                       for (std::size_t i = 0; i < g.order(); ++i) {
                           if (on_cycle.test(i) || dom.test(i)) continue;
                           std::size_t hits = (g.row(i) & on_cycle).count();
                           if (hits >= 1 && hits <= 3) continue;  // consecutive: enforced by classify_cycle
                           if (hits == 0 && !reach.test(i)) continue;
                           return "vertex " + std::to_string(g.id(i)) + " sees " + std::to_string(hits) +
                                  " cycle vertices and is not cut off by the dominating set";
                       }
                       return std::nullopt;
                   }});
    out.push_back({"pair-edges-only-between-consecutive", [](const Graph& g) -> std::optional<std::string> {
                       auto cs = shortest_cycle_structure(g);
                       const std::size_t p = cs.p();
                       for (std::size_t i = 0; i < p; ++i)
                           for (std::size_t j = i + 1; j < p; ++j) {
                               std::size_t gap = std::min(j - i, p - (j - i));
                               if (gap <= 1) continue;
                               for (auto x : cs.pair[i])
                                   for (auto y : cs.pair[j])
                                       if (g.adjacent(x, y))
                                           return "edge between pair sets " + std::to_string(i) + " and " + std::to_string(j);
                           }
                       return std::nullopt;
                   }});
    out.push_back({"cycle-dominating-sees-neighbourhood", [](const Graph& g) -> std::optional<std::string> {
                       shortest_cycle_structure(g);  // checked inside classify_cycle
                       return std::nullopt;
                   }});
    out.push_back({"second-hole-placement", [](const Graph& g) -> std::optional<std::string> {
                       auto cs = shortest_cycle_structure(g);
                       Bits on_cycle = g.to_bits_range(cs.cycle);
                       Bits ring = open_neighborhood(g, on_cycle);
                       auto inner = chordless_cycle_at(g, ring, long_cycle_min);
                       if (!inner) return std::nullopt;
                       VertexSet c1;
                       for (auto i : *inner) c1.insert(g.id(i));
                       for (auto x : c1)
                           if (cs.dominating.count(x)) return "second hole meets the cycle-dominating set";
                       bool meets_all = true;
                       for (auto v : cs.cycle) {
                           bool meets = false;
                           for (auto x : c1) meets = meets || g.adjacent(v, x);
                           meets_all = meets_all && meets;
                       }
                       if (meets_all) return std::nullopt;
                       for (std::size_t i = 0; i < cs.p(); ++i) {
                           bool in_single = true, in_pair = true;
                           for (auto x : c1) {
                               in_single = in_single && cs.single[i].count(x);
                               in_pair = in_pair && cs.pair[i].count(x);
                           }
                           if (in_single || in_pair) return std::nullopt;
                       }
                       return "second hole " + ids(c1) + " neither meets every cycle vertex nor sits on one position";
                   }});
    out.push_back({"clean-cycle-is-clean", [](const Graph& g) -> std::optional<std::string> {
                       require_cycle_host(g);
                       auto cs = find_clean_cycle(g);
                       if (!cs) return "no cycle found in a non-chordal host";
                       if (!is_clean(g, *cs)) return "returned cycle is not clean";
                       return std::nullopt;
                   }});
    out.push_back({"separator-breaks-every-hole", [](const Graph& g) -> std::optional<std::string> {
                       require_cycle_host(g);
                       auto cs = find_clean_cycle(g);
                       if (!cs || !is_ripe(g, *cs)) return std::nullopt;
                       VertexSet x = min_cycle_separator(g, *cs);
                       Bits rest = cycle_zone(g, *cs) - g.to_bits(x);
                       if (!chordal_fast(induced_subgraph(g, rest))) return "hole left after removing " + ids(x);
                       return std::nullopt;
                   }});
    out.push_back({"separator-is-minimum", [](const Graph& g) -> std::optional<std::string> {
                       require_cycle_host(g);
                       auto cs = find_clean_cycle(g);
                       if (!cs || !is_ripe(g, *cs)) return std::nullopt;
                       Bits zone = cycle_zone(g, *cs);
                       if (zone.count() > 20) return std::nullopt;
                       VertexSet got = min_cycle_separator(g, *cs);
                       std::vector<std::size_t> cand;
                       zone.for_each([&](std::size_t i) { cand.push_back(i); });
                       // plain subset scan, smallest first
                       for (std::size_t size = 0; size <= cand.size(); ++size) {
                           std::optional<VertexSet> first;
                           for_each_combination(cand.size(), size, [&](const std::vector<std::size_t>& pick) {
                               Bits x(g.order());
                               for (auto i : pick) x.set(cand[i]);
                               if (!chordal_fast(induced_subgraph(g, zone - x))) return false;
                               first = g.to_set(x);
                               return true;
                           });
                           if (!first) continue;
                           if (*first != got) return "separator " + ids(got) + " but brute force gives " + ids(*first);
                           return std::nullopt;
                       }
                       return std::string("brute force found no separator");
                   }});
    return out;
}

// ---- completion checks -------------------------------------------------

// All chord sets of size L-3 that make the cycle chordal; independent of
// the recursive enumerator.
inline std::set<EdgeSet> brute_triangulations(std::size_t len) {
    Graph c = make_cycle(len);
    std::vector<Edge> chords;
    for (VertexId i = 0; i < len; ++i)
        for (VertexId j = i + 2; j < len; ++j)
            if (!(i == 0 && j + 1 == len)) chords.emplace_back(i, j);
    std::set<EdgeSet> out;
    for_each_combination(chords.size(), len - 3, [&](const std::vector<std::size_t>& pick) {
        EdgeSet s;
        for (auto i : pick) s.insert(chords[i]);
        if (chordal_fast(add_edges(c, s))) out.insert(s);
        return false;
    });
    return out;
}

inline std::optional<std::string> check_triangulations(std::size_t len) {
    std::vector<VertexId> cyc(len);
    for (std::size_t i = 0; i < len; ++i) cyc[i] = static_cast<VertexId>(i);
    auto got = enumerate_cycle_triangulations(cyc);
    std::set<EdgeSet> uniq(got.begin(), got.end());
    if (uniq.size() != got.size()) return "duplicate triangulations for L=" + std::to_string(len);
    Graph c = make_cycle(len);
    for (const auto& t : got) {
        if (t.size() + 3 != len) return "triangulation with " + std::to_string(t.size()) + " chords";
        if (!chordal_fast(add_edges(c, t))) return "enumerated set does not triangulate";
        for (const auto& e : t) {
            EdgeSet less = t;
            less.erase(e);
            if (chordal_fast(add_edges(c, less))) return "enumerated set is not minimal";
        }
    }
    if (uniq != brute_triangulations(len)) return "family differs from brute force for L=" + std::to_string(len);
    return std::nullopt;
}

// Vertices on a chordless path from the centre to an end of the min AT can
// replace that end.
inline std::optional<std::string> check_end_shift(const Graph& g, bool at_a) {
    require_at_host(g);
    auto at = find_minimum_big_at(g);
    if (!at) return "no big AT found";
    VertexId end = at_a ? at->a : at->b;
    VertexId near = at_a ? at->at(1) : at->at(at->p());
    VertexId from = (at_a && at->w) ? *at->w : at->u;
    Bits allowed = g.all_bits();
    allowed.reset(g.index(near));
    auto path = shortest_path(g, g.index(from), g.index(end), allowed);
    if (path.size() < 4) return std::nullopt;  // need some x_i with i >= 2
    for (std::size_t i = 2; i + 1 < path.size(); ++i) {
        BigAT shifted = *at;
        (at_a ? shifted.a : shifted.b) = g.id(path[i]);
        if (!matches_template(g, shifted))
            return std::string("replacing ") + (at_a ? "a" : "b") + " by " + std::to_string(g.id(path[i])) +
                   " does not give a template";
    }
    return std::nullopt;
}

// After adding the batch joining c's side to the path separator, the new
// minimum AT (if any) uses none of the added edges.
inline std::optional<std::string> check_no_new_at(const Graph& g) {
    require_at_host(g);
    auto found = find_ripe_at(g, static_cast<int>(g.order()));
    if (!std::holds_alternative<RipeAT>(found)) return std::nullopt;
    const BigAT& at = std::get<RipeAT>(found).context.at;
    auto s3 = separator_batch(g, at);
    if (!s3 || s3->empty()) return std::nullopt;
    const EdgeSet& batch = *s3;
    Graph h = add_edges(g, batch);
    if (!chordal_fast(h) || find_small_obstruction(h)) return std::nullopt;
    auto next = find_minimum_big_at(h);
    if (!next) return std::nullopt;
    for (const auto& e : next->edges())
        if (batch.count(e)) return "minimum AT after the batch uses added edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return std::nullopt;
}

template <class Sampler>
SuiteReport run_suite(const std::string& name, std::size_t count, std::uint64_t seed, bool corrupt, Sampler sampler,
                      std::function<std::vector<NamedCheck>(const Sample&)> checks_for) {
    SuiteReport rep;
    rep.suite = name;
    Rng rng(seed);
    std::size_t round = 0;
    while (rep.instances < count) {
        auto s = sampler(rng, round++, corrupt);
        if (!s) {
            ++rep.rejected;
            if (rep.rejected > 200 * (count + 1)) break;
            continue;
        }
        ++rep.instances;
        for (const auto& c : checks_for(*s)) {
            ++rep.checks;
            if (auto msg = guarded(c.check, s->graph)) {
                PropertyFailure f{c.name, s->description, *msg, s->graph, minimize_failure(s->graph, c.check, *msg)};
                rep.failures.push_back(std::move(f));
            }
        }
    }
    return rep;
}

}  // namespace detail

inline SuiteReport run_structure_suite(std::size_t count, std::uint64_t seed, bool corrupt = false) {
    return detail::run_suite("structure", count, seed, corrupt, detail::sample_at_host,
                             [](const detail::Sample& s) { return detail::structure_checks(s.levels); });
}

inline SuiteReport run_cycles_suite(std::size_t count, std::uint64_t seed, bool corrupt = false) {
    return detail::run_suite("cycles", count, seed, corrupt, detail::sample_cycle_host,
                             [](const detail::Sample&) { return detail::cycle_checks(); });
}

inline SuiteReport run_completion_suite(std::size_t count, std::uint64_t seed, bool corrupt = false) {
    std::size_t round0 = 0;
    auto checks = [&round0](const detail::Sample&) {
        std::size_t len = 4 + round0++ % 6;
        std::vector<NamedCheck> out;
        out.push_back({"triangulations-L" + std::to_string(len),
                       [len](const Graph&) { return detail::check_triangulations(len); }});
        out.push_back({"shift-a-along-centre-path", [](const Graph& g) { return detail::check_end_shift(g, true); }});
        out.push_back({"shift-b-along-centre-path", [](const Graph& g) { return detail::check_end_shift(g, false); }});
        out.push_back({"no-new-at-after-separator-batch", [](const Graph& g) { return detail::check_no_new_at(g); }});
        return out;
    };
    return detail::run_suite("completion", count, seed, corrupt, detail::sample_at_host, checks);
}

}  // namespace ifpt
