#pragma once

#include "msr/graph_io.hpp"
#include "msr/instance.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <string>

namespace msr::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::uint64_t json_unsigned(const Json& j, std::string_view what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw Error(ErrorKind::parse, "expected a non-negative integer for " + std::string(what));
    return j.get<std::uint64_t>();
}

inline const Json& json_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Json parse_json(std::istream& in)
{
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

} // namespace detail

/// Instance file: {"graph": {"n", "edges": [[u, v, w], ...]}, "k", "delta"?,
/// "variant": "standard" | "exact" | "allowed", "allowed_centers"?}.
inline Json instance_to_json(const MsrInstance& inst)
{
    Json edges = Json::array();
    for (const Edge& e : inst.graph().edges())
        edges.push_back({e.u, e.v, e.w});
    Json j;
    j["graph"] = {{"n", inst.size()}, {"edges", std::move(edges)}};
    j["k"] = inst.k();
    if (inst.delta())
        j["delta"] = *inst.delta();
    j["variant"] = std::string(to_string(inst.kind()));
    if (inst.kind() == VariantKind::allowed_centers)
        j["allowed_centers"] = inst.variant().allowed;
    return j;
}

inline MsrInstance instance_from_json(const Json& j)
{
    using detail::json_field;
    using detail::json_unsigned;
    const Json& graph = json_field(j, "graph");
    const auto n = json_unsigned(json_field(graph, "n"), "graph.n");
    const Json& edge_list = json_field(graph, "edges");
    if (!edge_list.is_array())
        throw Error(ErrorKind::parse, "graph.edges must be an array");
    std::vector<Edge> edges;
    for (const Json& e : edge_list) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw Error(ErrorKind::parse, "each edge must be [u, v] or [u, v, w]");
        edges.push_back({static_cast<Vertex>(json_unsigned(e[0], "edge endpoint")),
            static_cast<Vertex>(json_unsigned(e[1], "edge endpoint")),
            e.size() == 3 ? json_unsigned(e[2], "edge weight") : 1});
    }
    const auto k = json_unsigned(json_field(j, "k"), "k");
    std::optional<Distance> delta;
    if (j.contains("delta") && !j.at("delta").is_null())
        delta = json_unsigned(j.at("delta"), "delta");
    Variant variant;
    const std::string kind = j.contains("variant") ? j.at("variant").get<std::string>() : "standard";
    if (kind == "standard") {
        variant = Variant::standard();
    } else if (kind == "exact") {
        variant = Variant::exact_nonzero();
    } else if (kind == "allowed") {
        std::vector<Vertex> allowed;
        for (const Json& a : json_field(j, "allowed_centers"))
            allowed.push_back(static_cast<Vertex>(json_unsigned(a, "allowed center")));
        variant = Variant::allowed_centers(std::move(allowed));
    } else {
        throw Error(ErrorKind::parse, "unknown variant '" + kind + "'");
    }
    return MsrInstance::make(build_graph(n, std::move(edges)), k, delta, std::move(variant));
}

inline MsrInstance read_instance(std::istream& in) { return instance_from_json(detail::parse_json(in)); }

inline MsrInstance read_instance_file(const std::string& path)
{
    auto in = open_input(path);
    return read_instance(in);
}

inline void write_instance(std::ostream& out, const MsrInstance& inst) { out << instance_to_json(inst).dump(2) << '\n'; }

/// Clustering file: {"pairs": [[center, radius], ...]}.
inline Json clustering_to_json(const Clustering& c)
{
    Json pairs = Json::array();
    for (const auto& p : c.pairs)
        pairs.push_back({p.center, p.radius});
    return Json{{"pairs", std::move(pairs)}};
}

inline Clustering clustering_from_json(const Json& j)
{
    Clustering c;
    const Json& pairs = detail::json_field(j, "pairs");
    if (!pairs.is_array())
        throw Error(ErrorKind::parse, "pairs must be an array");
    for (const Json& p : pairs) {
        if (!p.is_array() || p.size() != 2)
            throw Error(ErrorKind::parse, "each pair must be [center, radius]");
        c.pairs.push_back({static_cast<Vertex>(detail::json_unsigned(p[0], "center")),
            detail::json_unsigned(p[1], "radius")});
    }
    return c;
}

inline Clustering read_clustering(std::istream& in) { return clustering_from_json(detail::parse_json(in)); }

inline Clustering read_clustering_file(const std::string& path)
{
    auto in = open_input(path);
    return read_clustering(in);
}

inline void write_clustering(std::ostream& out, const Clustering& c) { out << clustering_to_json(c).dump() << '\n'; }

/// "(c,r) (c,r) ..." for terminal output.
inline std::string format_pairs(const Clustering& c)
{
    std::string s;
    for (const auto& p : c.pairs) {
        if (!s.empty())
            s += ' ';
        s += "(" + std::to_string(p.center) + "," + std::to_string(p.radius) + ")";
    }
    return s;
}

} // namespace msr::io
