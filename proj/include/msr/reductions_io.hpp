#pragma once

#include "msr/graph_io.hpp"
#include "msr/reductions.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace msr::io {

/// Clique input text: "n m k", a line with the 0-based class of each vertex,
/// then m lines "u v".
inline MccInstance read_mcc(std::istream& in)
{
    const auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0].size() != 3)
        throw Error(ErrorKind::parse, "clique header must be 'n m k'");
    const auto n = parse_unsigned(lines[0][0], "n");
    const auto m = parse_unsigned(lines[0][1], "m");
    const auto k = parse_unsigned(lines[0][2], "k");
    if (lines.size() < 2 || lines[1].size() != n)
        throw Error(ErrorKind::parse, "second line must list one class per vertex");
    std::vector<std::size_t> class_of;
    for (const auto& t : lines[1])
        class_of.push_back(parse_unsigned(t, "class index"));
    return MccInstance::make(build_graph(n, parse_edge_lines(lines, 2, m)), std::move(class_of), k);
}

inline MccInstance read_mcc_file(const std::string& path)
{
    auto in = open_input(path);
    return read_mcc(in);
}

inline void write_mcc(std::ostream& out, const MccInstance& mcc)
{
    out << mcc.order() << ' ' << mcc.graph().edges().size() << ' ' << mcc.k() << '\n';
    for (std::size_t v = 0; v < mcc.order(); ++v)
        out << (v ? " " : "") << mcc.class_of()[v];
    out << '\n';
    for (const Edge& e : mcc.graph().edges())
        out << e.u << ' ' << e.v << '\n';
}

/// Dominating-set text: "n m k", then m lines "u v".
inline DsInstance read_ds(std::istream& in)
{
    const auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0].size() != 3)
        throw Error(ErrorKind::parse, "dominating-set header must be 'n m k'");
    const auto n = parse_unsigned(lines[0][0], "n");
    const auto m = parse_unsigned(lines[0][1], "m");
    const auto k = parse_unsigned(lines[0][2], "k");
    return DsInstance::make(build_graph(n, parse_edge_lines(lines, 1, m)), k);
}

inline DsInstance read_ds_file(const std::string& path)
{
    auto in = open_input(path);
    return read_ds(in);
}

inline void write_ds(std::ostream& out, const DsInstance& ds)
{
    out << ds.graph.order() << ' ' << ds.graph.edges().size() << ' ' << ds.k << '\n';
    for (const Edge& e : ds.graph.edges())
        out << e.u << ' ' << e.v << '\n';
}

/// Roles sidecar: one line "index role-tag params" per point.
inline void write_roles(std::ostream& out, const std::vector<Role>& roles)
{
    for (std::size_t i = 0; i < roles.size(); ++i)
        out << i << ' ' << to_string(roles[i]) << '\n';
}

} // namespace msr::io
