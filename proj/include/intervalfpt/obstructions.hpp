#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "holes.hpp"
#include "recognition.hpp"

namespace ifpt {

// Obstructions with at most this many vertices are branched on directly.
inline constexpr std::size_t small_at_bound = 10;
// Shortest path length (number of path vertices strictly between a and b)
// for an asteroidal template to count as big.
inline constexpr std::size_t big_at_min_path = 7;

enum class ATKind { Type1, Type2 };

inline const char* to_string(ATKind k) { return k == ATKind::Type1 ? "type1" : "type2"; }

// Asteroidal template on terminals a, b, c. Path vertices v1..vp all see the
// centre u (and, for Type2, the second centre w). Type1: a-v1, vp-b, c-u.
// Type2: additionally a-u, b-w, c-w and u-w.
struct BigAT {
    ATKind kind = ATKind::Type1;
    VertexId a = 0, b = 0, c = 0, u = 0;
    std::optional<VertexId> w;
    std::vector<VertexId> path;  // v1..vp

    std::size_t p() const { return path.size(); }

    // Position 0 is a, p+1 is b, 1..p are the path vertices.
    VertexId at(std::size_t i) const { return i == 0 ? a : (i == p() + 1 ? b : path[i - 1]); }

    VertexSet vertices() const {
        VertexSet s{a, b, c, u};
        if (w) s.insert(*w);
        s.insert(path.begin(), path.end());
        return s;
    }

    EdgeSet edges() const {
        EdgeSet e;
        e.emplace(a, path.front());
        e.emplace(b, path.back());
        e.emplace(c, u);
        for (std::size_t i = 0; i + 1 < p(); ++i) e.emplace(path[i], path[i + 1]);
        for (auto v : path) e.emplace(u, v);
        if (kind == ATKind::Type2) {
            e.emplace(a, u);
            e.emplace(b, *w);
            e.emplace(c, *w);
            e.emplace(u, *w);
            for (auto v : path) e.emplace(*w, v);
        }
        return e;
    }

    bool operator==(const BigAT&) const = default;
};

// True iff the template's vertices induce exactly its edge set in g.
inline bool matches_template(const Graph& g, const BigAT& at) {
    if (at.path.empty() || (at.kind == ATKind::Type2) != at.w.has_value()) return false;
    VertexSet vs = at.vertices();
    if (vs.size() != at.p() + (at.w ? 5 : 4)) return false;
    for (auto v : vs)
        if (!g.has_vertex(v)) return false;
    EdgeSet want = at.edges();
    for (auto x = vs.begin(); x != vs.end(); ++x)
        for (auto y = std::next(x); y != vs.end(); ++y)
            if (g.adjacent(*x, *y) != (want.count(Edge(*x, *y)) > 0)) return false;
    return true;
}

enum class ObstructionKind { Hole, SmallAT };

struct Obstruction {
    ObstructionKind kind = ObstructionKind::Hole;
    VertexSet vertices;
    std::vector<VertexId> cycle;  // holes only, in cyclic order
    std::string family;           // "hole", "type1", "type2", "long-claw", "whipping-top"
};

namespace detail {

struct TemplateHit {
    ATKind kind = ATKind::Type1;
    std::size_t a = 0, b = 0, c = 0, u = 0, w = 0, p = 0;
};

inline BigAT hit_to_at(const Graph& g, const TemplateHit& h) {
    Bits inner = g.row(h.u) - g.closed_row(h.c);
    if (h.kind == ATKind::Type2) inner &= g.row(h.w);
    inner.set(h.a);
    inner.set(h.b);
    auto route = shortest_path(g, h.a, h.b, inner);
    BigAT at;
    at.kind = h.kind;
    at.a = g.id(h.a);
    at.b = g.id(h.b);
    at.c = g.id(h.c);
    at.u = g.id(h.u);
    if (h.kind == ATKind::Type2) at.w = g.id(h.w);
    for (std::size_t i = 1; i + 1 < route.size(); ++i) at.path.push_back(g.id(route[i]));
    return at;
}

// Scans ends a in `left`, b in `right` joined through `inner`; keeps the
// shortest path count in [pmin, pmax] strictly better than `best`.
inline void scan_ends(const Graph& g, const Bits& inner, const Bits& left, const Bits& right, bool ordered,
                      std::size_t pmin, std::size_t pmax, const TemplateHit& proto,
                      std::optional<TemplateHit>& best) {
    left.for_each([&](std::size_t a) {
        Bits src = g.row(a) & inner;
        if (src.none()) return;
        std::size_t cap = best ? std::min(best->p - 1, pmax) : pmax;
        if (cap < pmin) return;
        auto dist = bfs_distances(g, src, inner, static_cast<int>(cap) - 1);
        right.for_each([&](std::size_t b) {
            if (b == a || (ordered && b < a) || g.linked(a, b)) return;
            int hop = -1;
            (g.row(b) & inner).for_each([&](std::size_t v) {
                if (dist[v] >= 0 && (hop < 0 || dist[v] < hop)) hop = dist[v];
            });
            if (hop < 0) return;
            std::size_t p = static_cast<std::size_t>(hop) + 1;
            if (p < pmin || p > pmax || (best && p >= best->p)) return;
            TemplateHit h = proto;
            h.a = a;
            h.b = b;
            h.p = p;
            best = h;
        });
    });
}

inline std::optional<TemplateHit> min_type1(const Graph& g, std::size_t pmin, std::size_t pmax) {
    std::optional<TemplateHit> best;
    const Bits all = g.all_bits();
    for (std::size_t c = 0; c < g.order(); ++c) {
        const Bits nc = g.closed_row(c);
        g.row(c).for_each([&](std::size_t u) {
            Bits inner = g.row(u) - nc;
            if (inner.none()) return;
            Bits ends = all - g.closed_row(u) - nc;
            TemplateHit proto;
            proto.kind = ATKind::Type1;
            proto.c = c;
            proto.u = u;
            scan_ends(g, inner, ends, ends, true, pmin, pmax, proto, best);
        });
        if (best && best->p == pmin) break;
    }
    return best;
}

inline std::optional<TemplateHit> min_type2(const Graph& g, std::size_t pmin, std::size_t pmax) {
    std::optional<TemplateHit> best;
    for (std::size_t c = 0; c < g.order(); ++c) {
        const Bits nc = g.closed_row(c);
        g.row(c).for_each([&](std::size_t u) {
            (g.row(c) & g.row(u)).for_each([&](std::size_t w) {
                if (w < u) return;
                Bits inner = (g.row(u) & g.row(w)) - nc;
                if (inner.none()) return;
                Bits left = g.row(u) - g.closed_row(w) - nc;
                Bits right = g.row(w) - g.closed_row(u) - nc;
                TemplateHit proto;
                proto.kind = ATKind::Type2;
                proto.c = c;
                proto.u = u;
                proto.w = w;
                // the mirrored assignment (a on w) is the same template read backwards
                scan_ends(g, inner, left, right, false, pmin, pmax, proto, best);
            });
        });
        if (best && best->p == pmin) break;
    }
    return best;
}

// Centre with three legs of length two.
inline std::optional<VertexSet> find_long_claw(const Graph& g) {
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x) {
        const Bits nx = g.closed_row(x);
        auto legs = g.row(x).members();
        for (std::size_t i = 0; i < legs.size(); ++i)
            for (std::size_t j = i + 1; j < legs.size(); ++j) {
                std::size_t y1 = legs[i], y2 = legs[j];
                if (g.linked(y1, y2)) continue;
                for (std::size_t k = j + 1; k < legs.size(); ++k) {
                    std::size_t y3 = legs[k];
                    if (g.linked(y1, y3) || g.linked(y2, y3)) continue;
                    Bits z1s = g.row(y1) - nx - g.row(y2) - g.row(y3);
                    Bits z2s = g.row(y2) - nx - g.row(y1) - g.row(y3);
                    Bits z3s = g.row(y3) - nx - g.row(y1) - g.row(y2);
                    for (std::size_t z1 = z1s.first(); z1 < n; z1 = z1s.next(z1 + 1)) {
                        Bits z2r = z2s - g.closed_row(z1);
                        for (std::size_t z2 = z2r.first(); z2 < n; z2 = z2r.next(z2 + 1)) {
                            Bits z3r = z3s - g.closed_row(z1) - g.closed_row(z2);
                            std::size_t z3 = z3r.first();
                            if (z3 < n)
                                return VertexSet{g.id(x),  g.id(y1), g.id(y2), g.id(y3),
                                                 g.id(z1), g.id(z2), g.id(z3)};
                        }
                    }
                }
            }
    }
    return std::nullopt;
}

// Apex over an induced five-vertex path plus a pendant on the middle path vertex.
inline std::optional<VertexSet> find_whipping_top(const Graph& g) {
    const std::size_t n = g.order();
    for (std::size_t t = 0; t < n; ++t) {
        const Bits nt = g.closed_row(t);
        for (std::size_t mid = g.row(t).first(); mid < n; mid = g.row(t).next(mid + 1)) {
            Bits apexes = g.row(mid) - nt;
            for (std::size_t h = apexes.first(); h < n; h = apexes.next(h + 1)) {
                Bits inner = (g.row(h) & g.row(mid)) - nt;
                auto side = inner.members();
                for (std::size_t i = 0; i < side.size(); ++i)
                    for (std::size_t j = i + 1; j < side.size(); ++j) {
                        std::size_t q2 = side[i], q4 = side[j];
                        if (g.linked(q2, q4)) continue;
                        Bits q1s = (g.row(h) & g.row(q2)) - g.closed_row(mid) - g.closed_row(q4) - nt;
                        Bits q5s = (g.row(h) & g.row(q4)) - g.closed_row(mid) - g.closed_row(q2) - nt;
                        for (std::size_t q1 = q1s.first(); q1 < n; q1 = q1s.next(q1 + 1)) {
                            std::size_t q5 = (q5s - g.closed_row(q1)).first();
                            if (q5 < n)
                                return VertexSet{g.id(t), g.id(mid), g.id(h), g.id(q1), g.id(q2), g.id(q4), g.id(q5)};
                        }
                    }
            }
        }
    }
    return std::nullopt;
}

// Vertex-minimal non-interval check for small vertex sets.
inline bool is_minimal_obstruction(const Graph& g, const VertexSet& s) {
    Graph h = induced_subgraph(g, s);
    if (is_interval(h)) return false;
    for (std::size_t i = 0; i < h.order(); ++i) {
        Bits keep = h.all_bits();
        keep.reset(i);
        if (!is_interval(induced_subgraph(h, keep))) return false;
    }
    return true;
}

}  // namespace detail

// Shortest Type1/Type2 template whose path count lies in [pmin, pmax];
// Type1 wins ties.
inline std::optional<BigAT> find_min_template(const Graph& g, std::size_t pmin, std::size_t pmax) {
    auto t1 = detail::min_type1(g, std::max<std::size_t>(pmin, 2), pmax);
    auto t2 = detail::min_type2(g, std::max<std::size_t>(pmin, 1), t1 ? std::min(pmax, t1->p - 1) : pmax);
    if (t2 && (!t1 || t2->p < t1->p)) return detail::hit_to_at(g, *t2);
    if (t1) return detail::hit_to_at(g, *t1);
    return std::nullopt;
}

// Hole of length 4..8 if one exists; otherwise the smallest minimal
// asteroidal obstruction of bounded size (long claw, whipping top, or a
// Type1/Type2 template that is not big).
inline std::optional<Obstruction> find_small_obstruction(const Graph& g) {
    if (!detail::chordal_fast(g)) {
        auto cyc = chordless_cycle_at(g, g.all_bits(), 4);
        if (cyc && cyc->size() <= 8) {
            Obstruction o;
            o.kind = ObstructionKind::Hole;
            o.cycle = g.to_ids(*cyc);
            o.vertices = VertexSet(o.cycle.begin(), o.cycle.end());
            o.family = "hole";
            return o;
        }
    }
    std::optional<Obstruction> best;
    auto offer = [&](VertexSet vs, const char* family) {
        if (best && best->vertices.size() <= vs.size()) return;
        Obstruction o;
        o.kind = ObstructionKind::SmallAT;
        o.vertices = std::move(vs);
        o.family = family;
        best = std::move(o);
    };
    if (auto t = find_min_template(g, 1, big_at_min_path - 1)) offer(t->vertices(), to_string(t->kind));
    if (!best || best->vertices.size() > 7) {
        if (auto s = detail::find_long_claw(g)) offer(*s, "long-claw");
        if (auto s = detail::find_whipping_top(g)) offer(*s, "whipping-top");
    }
    if (best && !detail::is_minimal_obstruction(g, best->vertices))
        throw StructureViolation("small obstruction candidate is not a minimal non-interval subgraph");
    return best;
}

// Greedy vertex removal in ascending id order while the rest stays
// non-interval. The result is vertex-minimal.
inline VertexSet shrink_to_minimal(const Graph& g, const VertexSet& start) {
    VertexSet w = start;
    if (is_interval(induced_subgraph(g, w))) throw ContractViolation("shrink_to_minimal: set induces an interval graph");
    for (auto v : start) {
        VertexSet trial = w;
        trial.erase(v);
        if (!is_interval(induced_subgraph(g, trial))) w = std::move(trial);
    }
    return w;
}

// Big asteroidal template with the fewest path vertices; Type1 preferred on
// ties. Meaningful on chordal graphs without small obstructions.
inline std::optional<BigAT> find_minimum_big_at(const Graph& g) {
    return find_min_template(g, big_at_min_path, g.order());
}

}  // namespace ifpt
