#pragma once

#include "msr/graph.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace msr {

struct NeighborhoodProfile {
    std::vector<std::size_t> counts; ///< #(v): distinct balls around v
    std::size_t max = 0;             ///< #(G)
};

/// #(v) for every point. On an integer metric two radii give different balls
/// exactly when a point sits at a distance between them, so #(v) is the
/// number of distinct finite distances from v.
inline NeighborhoodProfile neighborhood_profile(const MetricSpace& m)
{
    NeighborhoodProfile p;
    p.counts.reserve(m.size());
    for (Vertex v = 0; v < m.size(); ++v) {
        p.counts.push_back(candidate_radii(m, v).size());
        p.max = std::max(p.max, p.counts.back());
    }
    return p;
}

/// Size caps for the exponential parameter routines.
struct ParamCaps {
    std::size_t longest_path = 16;
    std::size_t treedepth = 12;
    std::size_t treewidth = 11;
    std::size_t vertex_cover = 32;
    std::size_t feedback_vertex = 16;
};

namespace detail {

using Mask = std::uint64_t;

inline void require_cap(const WeightedGraph& g, std::size_t cap, const char* what)
{
    if (g.order() > cap)
        throw Error(ErrorKind::size_cap,
            std::string(what) + " is exact only for n <= " + std::to_string(cap) + " (n=" + std::to_string(g.order()) + ")");
}

/// Skeleton adjacency as bitmasks; callers guarantee n <= 64.
inline std::vector<Mask> adjacency_masks(const WeightedGraph& g)
{
    std::vector<Mask> adj(g.order(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

inline Mask component_of(const std::vector<Mask>& adj, Mask within, int start)
{
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

inline int vertex_cover_rec(const std::vector<Mask>& adj, Mask rem)
{
    int best_v = -1;
    int best_deg = 0;
    for (Mask r = rem; r; r &= r - 1) {
        const int v = std::countr_zero(r);
        const int deg = std::popcount(adj[v] & rem);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    if (best_v < 0)
        return 0;
    if (best_deg <= 2) {
        // disjoint paths and cycles: floor(p/2) resp. ceil(c/2)
        int total = 0;
        for (Mask r = rem; r;) {
            const Mask comp = component_of(adj, rem, std::countr_zero(r));
            r &= ~comp;
            const int order = std::popcount(comp);
            int twice_edges = 0;
            for (Mask c = comp; c; c &= c - 1)
                twice_edges += std::popcount(adj[std::countr_zero(c)] & comp);
            const bool cycle = twice_edges == 2 * order && order > 2;
            total += cycle ? (order + 1) / 2 : order / 2;
        }
        return total;
    }
    const Mask v_bit = Mask{1} << best_v;
    const Mask nb = adj[best_v] & rem;
    return std::min(1 + vertex_cover_rec(adj, rem & ~v_bit),
        best_deg + vertex_cover_rec(adj, rem & ~nb & ~v_bit));
}

} // namespace detail

/// Number of vertices on a longest simple path (weights ignored).
inline std::size_t longest_path_order(const WeightedGraph& g, std::size_t cap = ParamCaps{}.longest_path)
{
    detail::require_cap(g, std::min<std::size_t>(cap, 24), "longest path");
    const std::size_t n = g.order();
    if (n == 0)
        return 0;
    const auto adj = detail::adjacency_masks(g);
    // ends[mask]: vertices at which some simple path spanning exactly mask ends
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (std::size_t v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;
    std::size_t best = 1;
    for (std::size_t mask = 1; mask < ends.size(); ++mask) {
        if (!ends[mask])
            continue;
        best = std::max<std::size_t>(best, std::popcount(mask));
        for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (detail::Mask nb = adj[v] & ~detail::Mask(mask); nb; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                ends[mask | (std::size_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

/// Exact treedepth by memoised recursive elimination over vertex subsets.
/// Disconnected inputs yield the maximum over components.
inline std::size_t treedepth_exact(const WeightedGraph& g, std::size_t cap = ParamCaps{}.treedepth)
{
    detail::require_cap(g, std::min<std::size_t>(cap, 20), "treedepth");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency_masks(g);
    std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
    memo[0] = 0;

    auto td = [&](auto&& self, detail::Mask s) -> int {
        if (memo[s] >= 0)
            return memo[s];
        const detail::Mask comp = detail::component_of(adj, s, std::countr_zero(s));
        int result = 0;
        if (comp != s) {
            result = std::max(self(self, comp), self(self, s & ~comp));
        } else {
            result = static_cast<int>(n) + 1;
            for (detail::Mask r = s; r; r &= r - 1)
                result = std::min(result, 1 + self(self, s & ~(detail::Mask{1} << std::countr_zero(r))));
        }
        memo[s] = static_cast<std::int8_t>(result);
        return result;
    };
    return static_cast<std::size_t>(td(td, (detail::Mask{1} << n) - 1));
}

/// Exact treewidth by the subset recurrence over elimination orderings:
/// TW(S) = min_{v in S} max(TW(S \ v), |Q(S \ v, v)|), where Q(S, v) are the
/// vertices outside S + v reachable from v through S.
inline std::size_t treewidth_exact(const WeightedGraph& g, std::size_t cap = ParamCaps{}.treewidth)
{
    detail::require_cap(g, std::min<std::size_t>(cap, 20), "treewidth");
    const std::size_t n = g.order();
    if (n == 0)
        return 0;
    const auto adj = detail::adjacency_masks(g);
    const detail::Mask all = (detail::Mask{1} << n) - 1;

    auto q_size = [&](detail::Mask s, int v) {
        // flood from v through s; count reached vertices outside s and v
        detail::Mask reached = detail::Mask{1} << v;
        detail::Mask inner = reached;
        while (inner) {
            detail::Mask next = 0;
            for (detail::Mask f = inner; f; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            next &= ~reached;
            reached |= next;
            inner = next & s;
        }
        return std::popcount(reached & ~s & ~(detail::Mask{1} << v));
    };

    constexpr int unset = -2;
    std::vector<int> tw(std::size_t{1} << n, unset);
    tw[0] = -1;
    for (detail::Mask s = 1; s <= all; ++s) {
        int best = static_cast<int>(n);
        for (detail::Mask r = s; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            const detail::Mask rest = s & ~(detail::Mask{1} << v);
            best = std::min(best, std::max(tw[rest], q_size(rest, v)));
        }
        tw[s] = best;
    }
    return static_cast<std::size_t>(std::max(tw[all], 0));
}

/// Exact vertex cover number by max-degree branching (v, or all of N(v)).
inline std::size_t vertex_cover_number(const WeightedGraph& g, std::size_t cap = ParamCaps{}.vertex_cover)
{
    detail::require_cap(g, std::min<std::size_t>(cap, 64), "vertex cover");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency_masks(g);
    const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;
    return static_cast<std::size_t>(detail::vertex_cover_rec(adj, all));
}

/// True when deleting `removed` leaves an acyclic graph.
inline bool is_forest_after_removal(const WeightedGraph& g, const std::vector<bool>& removed)
{
    std::vector<Vertex> parent(g.order());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (removed[e.u] || removed[e.v])
            continue;
        const Vertex a = find(e.u);
        const Vertex b = find(e.v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true;
}

/// Exact feedback vertex number by subset search in order of size.
inline std::size_t feedback_vertex_number(const WeightedGraph& g, std::size_t cap = ParamCaps{}.feedback_vertex)
{
    detail::require_cap(g, std::min<std::size_t>(cap, 24), "feedback vertex set");
    const std::size_t n = g.order();
    std::size_t best = n;
    std::vector<bool> removed(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best)
            continue;
        for (std::size_t v = 0; v < n; ++v)
            removed[v] = (mask >> v) & 1;
        if (is_forest_after_removal(g, removed))
            best = size;
    }
    return best;
}

/// Parameters named in the bound chain; a field is empty when the graph is
/// beyond the corresponding cap.
struct StructuralProfile {
    std::vector<std::size_t> per_vertex_neighborhood_counts;
    std::size_t neighborhood_count_max = 0;
    std::optional<std::size_t> longest_path_order;
    std::optional<std::size_t> treedepth;
    std::optional<std::size_t> treewidth;
    std::optional<std::size_t> vertex_cover;
    std::optional<std::size_t> feedback_vertex;
};

inline StructuralProfile structural_profile(const WeightedGraph& g, const ParamCaps& caps = {})
{
    StructuralProfile p;
    const auto nb = neighborhood_profile(shortest_path_metric(g));
    p.per_vertex_neighborhood_counts = nb.counts;
    p.neighborhood_count_max = nb.max;
    const std::size_t n = g.order();
    if (n <= caps.longest_path)
        p.longest_path_order = longest_path_order(g, caps.longest_path);
    if (n <= caps.treedepth)
        p.treedepth = treedepth_exact(g, caps.treedepth);
    if (n <= caps.treewidth)
        p.treewidth = treewidth_exact(g, caps.treewidth);
    if (n <= caps.vertex_cover)
        p.vertex_cover = vertex_cover_number(g, caps.vertex_cover);
    if (n <= caps.feedback_vertex)
        p.feedback_vertex = feedback_vertex_number(g, caps.feedback_vertex);
    return p;
}

} // namespace msr
