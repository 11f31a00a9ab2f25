#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace ifpt {

// Text format: "n m", then m lines "u v" with ids in 0..n-1. Blank lines
// and anything after '#' are ignored.
namespace detail {

inline std::vector<std::string> fields(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline std::uint64_t number(const std::string& tok, std::size_t line) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) throw ParseError(line, "not a non-negative integer: '" + tok + "'");
    return v;
}

}  // namespace detail

inline Graph read_instance(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::optional<Graph> g;
    std::uint64_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto f = detail::fields(line);
        if (f.empty()) continue;
        if (f.size() != 2) throw ParseError(lineno, "expected two integers");
        auto x = detail::number(f[0], lineno), y = detail::number(f[1], lineno);
        if (!header) {
            if (x > 1'000'000) throw ParseError(lineno, "vertex count too large");
            header = {x, y};
            g.emplace(static_cast<std::size_t>(x));
            continue;
        }
        if (x >= header->first || y >= header->first) throw ParseError(lineno, "vertex id out of range");
        if (x == y) throw ParseError(lineno, "self-loop");
        if (g->linked(x, y)) throw ParseError(lineno, "duplicate edge");
        if (++seen > header->second) throw ParseError(lineno, "more edges than the header declares");
        g->link(x, y);
    }
    if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (seen != header->second)
        throw ParseError(lineno, "header declares " + std::to_string(header->second) + " edges, found " + std::to_string(seen));
    return std::move(*g);
}

inline Graph read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_instance(in);
}

inline Graph parse_instance(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

// Canonical form: header, then edges sorted. Ids must be 0..n-1.
inline std::string write_instance(const Graph& g) {
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.id(i) != i) throw ContractViolation("write_instance: ids must be 0..n-1");
    auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace ifpt
