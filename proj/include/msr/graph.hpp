#pragma once

#include "msr/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace msr {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;
using Distance = std::uint64_t;

inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Total edge weight admitted by build_graph. Keeping every path length
/// below 2^62 makes all distance sums overflow-free.
inline constexpr Weight kMaxTotalWeight = Weight{1} << 62;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex to;
    Weight w;
};

/// Simple undirected graph with positive integer edge weights.
class WeightedGraph {
public:
    WeightedGraph() = default;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }
    bool unit() const noexcept { return unit_; }
    Weight total_weight() const noexcept { return total_weight_; }

    bool has_edge(Vertex u, Vertex v) const
    {
        if (u >= order() || v >= order())
            return false;
        const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
        const Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
        return std::any_of(a.begin(), a.end(), [&](const Neighbor& nb) { return nb.to == other; });
    }

    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    friend WeightedGraph build_graph(std::size_t n, std::vector<Edge> edges);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    bool unit_ = true;
    Weight total_weight_ = 0;
};

/// Validates and assembles a graph. Edge order is preserved; endpoints are
/// stored as given.
inline WeightedGraph build_graph(std::size_t n, std::vector<Edge> edges)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw Error(ErrorKind::size_cap, "vertex count " + std::to_string(n) + " exceeds index range");

    WeightedGraph g;
    g.adjacency_.assign(n, {});
    std::set<std::pair<Vertex, Vertex>> seen;
    Weight total = 0;
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(ErrorKind::vertex_out_of_range,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} with n=" + std::to_string(n));
        if (e.u == e.v)
            throw Error(ErrorKind::self_loop, "vertex " + std::to_string(e.u));
        if (e.w == 0)
            throw Error(ErrorKind::zero_weight,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw Error(ErrorKind::duplicate_edge,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        if (e.w > kMaxTotalWeight || total > kMaxTotalWeight - e.w)
            throw Error(ErrorKind::weight_overflow, "total edge weight exceeds 2^62");
        total += e.w;
        if (e.w != 1)
            g.unit_ = false;
        g.adjacency_[e.u].push_back({e.v, e.w});
        g.adjacency_[e.v].push_back({e.u, e.w});
    }
    g.edges_ = std::move(edges);
    g.total_weight_ = total;
    return g;
}

/// Labels every vertex with the index of its connected component. Returns
/// the labels and the number of components.
inline std::pair<std::vector<std::uint32_t>, std::uint32_t> connected_components(const WeightedGraph& g)
{
    const std::size_t n = g.order();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> comp(n, unset);
    std::uint32_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != unset)
            continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(v)) {
                if (comp[nb.to] == unset) {
                    comp[nb.to] = count;
                    stack.push_back(nb.to);
                }
            }
        }
        ++count;
    }
    return {std::move(comp), count};
}

inline bool is_connected(const WeightedGraph& g)
{
    return g.order() <= 1 || connected_components(g).second == 1;
}

/// Dense pairwise distance table. Entries equal kInfinity only for pairs in
/// different components, which is possible solely when the table was built
/// with Connectivity::allow_disconnected.
class MetricSpace {
public:
    MetricSpace() = default;
    MetricSpace(std::size_t n, std::vector<Distance> dist) : n_(n), dist_(std::move(dist))
    {
        if (dist_.size() != n_ * n_)
            throw Error(ErrorKind::invalid_argument, "distance table size mismatch");
    }

    std::size_t size() const noexcept { return n_; }

    Distance at(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    std::span<const Distance> row(Vertex u) const
    {
        return std::span<const Distance>(dist_).subspan(static_cast<std::size_t>(u) * n_, n_);
    }

    bool finite() const
    {
        return std::none_of(dist_.begin(), dist_.end(), [](Distance d) { return d == kInfinity; });
    }

    friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Distance> dist_;
};

enum class Connectivity { require_connected, allow_disconnected };

namespace detail {

inline void bfs_row(const WeightedGraph& g, Vertex source, std::span<Distance> row)
{
    std::fill(row.begin(), row.end(), kInfinity);
    std::vector<Vertex> frontier{source};
    row[source] = 0;
    std::size_t head = 0;
    while (head < frontier.size()) {
        const Vertex v = frontier[head++];
        for (const Neighbor& nb : g.neighbors(v)) {
            if (row[nb.to] == kInfinity) {
                row[nb.to] = row[v] + 1;
                frontier.push_back(nb.to);
            }
        }
    }
}

inline void dijkstra_row(const WeightedGraph& g, Vertex source, std::span<Distance> row)
{
    std::fill(row.begin(), row.end(), kInfinity);
    using Item = std::pair<Distance, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d != row[v])
            continue;
        for (const Neighbor& nb : g.neighbors(v)) {
            const Distance nd = d + nb.w;
            if (nd < row[nb.to]) {
                row[nb.to] = nd;
                heap.emplace(nd, nb.to);
            }
        }
    }
}

} // namespace detail

/// All-pairs shortest-path distances: breadth-first search on unit graphs,
/// Dijkstra otherwise. Exact integer arithmetic throughout.
inline MetricSpace shortest_path_metric(const WeightedGraph& g,
    Connectivity policy = Connectivity::require_connected)
{
    const std::size_t n = g.order();
    if (policy == Connectivity::require_connected && !is_connected(g))
        throw Error(ErrorKind::disconnected, "graph has pairs at infinite distance");
    std::vector<Distance> dist(n * n);
    for (Vertex s = 0; s < n; ++s) {
        std::span<Distance> row(dist.data() + static_cast<std::size_t>(s) * n, n);
        if (g.unit())
            detail::bfs_row(g, s, row);
        else
            detail::dijkstra_row(g, s, row);
    }
    return MetricSpace(n, std::move(dist));
}

inline void check_vertex(const MetricSpace& m, Vertex c)
{
    if (c >= m.size())
        throw Error(ErrorKind::vertex_out_of_range, "vertex " + std::to_string(c) + " with n=" + std::to_string(m.size()));
}

/// Closed ball { v : d(c, v) <= r }, ascending.
inline std::vector<Vertex> ball(const MetricSpace& m, Vertex c, Distance r)
{
    check_vertex(m, c);
    std::vector<Vertex> out;
    const auto row = m.row(c);
    for (Vertex v = 0; v < m.size(); ++v)
        if (row[v] <= r)
            out.push_back(v);
    return out;
}

/// Sorted distinct finite distances from c, optionally truncated at budget.
/// Always starts with 0.
inline std::vector<Distance> candidate_radii(const MetricSpace& m, Vertex c,
    std::optional<Distance> budget = std::nullopt)
{
    check_vertex(m, c);
    std::vector<Distance> radii;
    for (Distance d : m.row(c))
        if (d != kInfinity && (!budget || d <= *budget))
            radii.push_back(d);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    return radii;
}

/// Distance from c to its nearest other point, i.e. the smallest radius whose
/// ball holds at least two points. kInfinity when c is isolated.
inline Distance nearest_other(const MetricSpace& m, Vertex c)
{
    Distance best = kInfinity;
    const auto row = m.row(c);
    for (Vertex v = 0; v < m.size(); ++v)
        if (v != c)
            best = std::min(best, row[v]);
    return best;
}

/// Where a fresh vertex of a subdivided graph came from: the index of the
/// source edge and its 1-based position along the path from edge.u.
struct SubdivisionOrigin {
    std::size_t edge = 0;
    Weight position = 0;
};

struct Subdivision {
    WeightedGraph graph;
    std::vector<SubdivisionOrigin> origin; ///< one entry per fresh vertex, in index order
};

inline constexpr std::size_t kDefaultSubdivisionCap = 1'000'000;

/// Replaces every edge of weight w by a path of w unit edges. Original
/// vertices keep indices 0..n-1; fresh vertices follow in edge order.
inline Subdivision subdivide_to_unit_traced(const WeightedGraph& g, std::size_t vertex_cap = kDefaultSubdivisionCap)
{
    std::size_t total = g.order();
    for (const Edge& e : g.edges()) {
        if (e.w - 1 > vertex_cap || total > vertex_cap - (e.w - 1))
            throw Error(ErrorKind::size_cap,
                "subdivision would exceed " + std::to_string(vertex_cap) + " vertices");
        total += e.w - 1;
    }

    Subdivision out;
    std::vector<Edge> edges;
    edges.reserve(total);
    out.origin.reserve(total - g.order());
    Vertex next = static_cast<Vertex>(g.order());
    for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
        const Edge& e = g.edges()[idx];
        Vertex prev = e.u;
        for (Weight pos = 1; pos < e.w; ++pos) {
            edges.push_back({prev, next, 1});
            out.origin.push_back({idx, pos});
            prev = next++;
        }
        edges.push_back({prev, e.v, 1});
    }
    out.graph = build_graph(total, std::move(edges));
    return out;
}

inline WeightedGraph subdivide_to_unit(const WeightedGraph& g, std::size_t vertex_cap = kDefaultSubdivisionCap)
{
    return subdivide_to_unit_traced(g, vertex_cap).graph;
}

/// Two-colouring (side 0 / side 1 per vertex) when the graph is bipartite.
/// Each component's smallest vertex gets side 0.
inline std::optional<std::vector<std::uint8_t>> is_bipartite(const WeightedGraph& g)
{
    const std::size_t n = g.order();
    constexpr std::uint8_t unset = 2;
    std::vector<std::uint8_t> side(n, unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != unset)
            continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(v)) {
                if (side[nb.to] == unset) {
                    side[nb.to] = static_cast<std::uint8_t>(1 - side[v]);
                    stack.push_back(nb.to);
                } else if (side[nb.to] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

} // namespace msr
