#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "search.hpp"

namespace ifpt {

// Machine-readable result of one solver run. Field names are fixed and the
// parser rejects anything it does not know.
struct RunRecord {
    std::string problem;  // "deletion" | "completion"
    std::string instance;
    int k = 0;
    bool optimize = false;
    std::string outcome;  // "yes" | "no"
    std::optional<std::vector<VertexId>> vertices;                     // deletion, yes only
    std::optional<std::vector<std::pair<VertexId, VertexId>>> edges;  // completion, yes only
    SearchStats stats;
    // Both checks are filled for yes; the oracle one is null when the
    // graph is above the oracle's size guard.
    std::optional<bool> verified_recognition;
    std::optional<bool> verified_oracle;
    std::optional<std::string> oracle;  // "match" | "mismatch" | "skipped"
    std::optional<int> oracle_optimum;
    std::optional<std::uint64_t> seed;
};

namespace detail {

using json = nlohmann::ordered_json;

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    if (!j.is_object()) throw ParseError(0, std::string(where) + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw ParseError(0, std::string("unknown field '") + it.key() + "' in " + where);
}

inline json stats_json(const SearchStats& s) {
    json by_kind = json::object();
    for (std::size_t i = 0; i < node_kind_count; ++i) {
        auto kind = static_cast<NodeKind>(i);
        by_kind[to_string(kind)] = {{"nodes", s.branch_nodes[i]}, {"max_degree", s.max_degree_by_kind[i]}};
    }
    return {{"nodes", s.nodes},         {"max_depth", s.max_depth}, {"max_degree", s.max_degree},
            {"by_kind", by_kind},       {"memo_hits", s.memo_hits}, {"elapsed_ms", s.elapsed_ms}};
}

inline SearchStats stats_from(const json& j) {
    only_keys(j, {"nodes", "max_depth", "max_degree", "by_kind", "memo_hits", "elapsed_ms"}, "stats");
    SearchStats s;
    s.nodes = j.at("nodes").get<std::uint64_t>();
    s.max_depth = j.at("max_depth").get<std::size_t>();
    s.max_degree = j.at("max_degree").get<std::size_t>();
    s.memo_hits = j.at("memo_hits").get<std::uint64_t>();
    s.elapsed_ms = j.at("elapsed_ms").get<double>();
    const json& by = j.at("by_kind");
    only_keys(by, {"small_obstruction", "big_at", "hole", "cycle", "cycle_local"}, "stats.by_kind");
    for (std::size_t i = 0; i < node_kind_count; ++i) {
        const json& e = by.at(to_string(static_cast<NodeKind>(i)));
        only_keys(e, {"nodes", "max_degree"}, "stats.by_kind entry");
        s.branch_nodes[i] = e.at("nodes").get<std::uint64_t>();
        s.max_degree_by_kind[i] = e.at("max_degree").get<std::size_t>();
    }
    return s;
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace detail

inline std::string to_json(const RunRecord& r, int indent = 2) {
    using detail::json;
    if ((r.outcome == "yes") != (r.vertices.has_value() || r.edges.has_value()))
        throw ContractViolation("run record: solution must be present exactly for yes");
    json j;
    j["problem"] = r.problem;
    j["instance"] = r.instance;
    j["k"] = r.k;
    j["optimize"] = r.optimize;
    j["outcome"] = r.outcome;
    if (r.vertices) j["solution"] = *r.vertices;
    if (r.edges) {
        json arr = json::array();
        for (auto [u, v] : *r.edges) arr.push_back({u, v});
        j["solution"] = arr;
    }
    j["stats"] = detail::stats_json(r.stats);
    if (r.outcome == "yes")
        j["verification"] = {{"recognition", detail::opt(r.verified_recognition)}, {"oracle", detail::opt(r.verified_oracle)}};
    j["oracle"] = {{"status", detail::opt(r.oracle)}, {"optimum", detail::opt(r.oracle_optimum)}};
    j["seed"] = detail::opt(r.seed);
    return j.dump(indent);
}

inline RunRecord run_record_from_json(const std::string& text) {
    using detail::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    try {
        detail::only_keys(j, {"problem", "instance", "k", "optimize", "outcome", "solution", "stats", "verification",
                              "oracle", "seed"},
                          "run record");
        RunRecord r;
        r.problem = j.at("problem").get<std::string>();
        if (r.problem != "deletion" && r.problem != "completion") throw ParseError(0, "unknown problem " + r.problem);
        r.instance = j.at("instance").get<std::string>();
        r.k = j.at("k").get<int>();
        r.optimize = j.at("optimize").get<bool>();
        r.outcome = j.at("outcome").get<std::string>();
        if (r.outcome != "yes" && r.outcome != "no") throw ParseError(0, "unknown outcome " + r.outcome);
        if (j.contains("solution") != (r.outcome == "yes")) throw ParseError(0, "solution must be present exactly for yes");
        if (j.contains("solution")) {
            if (r.problem == "deletion") {
                r.vertices = j.at("solution").get<std::vector<VertexId>>();
            } else {
                std::vector<std::pair<VertexId, VertexId>> es;
                for (const auto& e : j.at("solution")) es.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
                r.edges = std::move(es);
            }
        }
        r.stats = detail::stats_from(j.at("stats"));
        if (r.outcome == "yes") {
            const json& v = j.at("verification");
            detail::only_keys(v, {"recognition", "oracle"}, "verification");
            r.verified_recognition = detail::opt_from<bool>(v, "recognition");
            r.verified_oracle = detail::opt_from<bool>(v, "oracle");
        } else if (j.contains("verification")) {
            throw ParseError(0, "verification only belongs to yes records");
        }
        const json& o = j.at("oracle");
        detail::only_keys(o, {"status", "optimum"}, "oracle");
        r.oracle = detail::opt_from<std::string>(o, "status");
        r.oracle_optimum = detail::opt_from<int>(o, "optimum");
        r.seed = detail::opt_from<std::uint64_t>(j, "seed");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace ifpt
