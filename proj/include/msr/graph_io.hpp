#pragma once

#include "msr/graph.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace msr::io {

/// Strict decimal parse of an unsigned integer token. Signs, fractions and
/// exponents are rejected.
inline std::uint64_t parse_unsigned(std::string_view token, std::string_view what)
{
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorKind::parse, "expected a non-negative integer for " + std::string(what) + ", got '" + std::string(token) + "'");
    return value;
}

/// Splits the stream into whitespace tokens per logical line, skipping blank
/// lines and '#' comments.
inline std::vector<std::vector<std::string>> tokenize_lines(std::istream& in)
{
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;)
            tokens.push_back(t);
        if (!tokens.empty())
            lines.push_back(std::move(tokens));
    }
    return lines;
}

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, "cannot open '" + path + "'");
    return in;
}

/// Parses edge lines "u v [w]" starting at lines[first]; w defaults to 1.
inline std::vector<Edge> parse_edge_lines(const std::vector<std::vector<std::string>>& lines,
    std::size_t first, std::size_t m)
{
    if (lines.size() != first + m)
        throw Error(ErrorKind::parse, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - std::min(lines.size(), first)));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t.size() != 2 && t.size() != 3)
            throw Error(ErrorKind::parse, "edge line " + std::to_string(i - first + 1) + " must be 'u v [w]'");
        Edge e;
        e.u = static_cast<Vertex>(parse_unsigned(t[0], "edge endpoint"));
        e.v = static_cast<Vertex>(parse_unsigned(t[1], "edge endpoint"));
        e.w = t.size() == 3 ? parse_unsigned(t[2], "edge weight") : 1;
        edges.push_back(e);
    }
    return edges;
}

/// Graph text format: "n m" header, then m lines "u v [w]".
inline WeightedGraph read_graph(std::istream& in)
{
    const auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0].size() != 2)
        throw Error(ErrorKind::parse, "graph header must be 'n m'");
    const auto n = parse_unsigned(lines[0][0], "n");
    const auto m = parse_unsigned(lines[0][1], "m");
    return build_graph(n, parse_edge_lines(lines, 1, m));
}

inline WeightedGraph read_graph_file(const std::string& path)
{
    auto in = open_input(path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g)
{
    out << g.order() << ' ' << g.edges().size() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (!g.unit())
            out << ' ' << e.w;
        out << '\n';
    }
}

} // namespace msr::io
