#pragma once

#include "msr/instance.hpp"
#include "msr/params.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace msr {

/// Multicoloured clique input: a unit graph whose vertices are split into k
/// classes; class_of[v] is 0-based.
class MccInstance {
public:
    MccInstance() = default;

    static MccInstance make(WeightedGraph graph, std::vector<std::size_t> class_of, std::size_t k)
    {
        if (class_of.size() != graph.order())
            throw Error(ErrorKind::invalid_argument, "class list length differs from vertex count");
        if (!graph.unit())
            throw Error(ErrorKind::invalid_argument, "clique input graph must be unweighted");
        std::vector<std::size_t> sizes(k, 0);
        for (const std::size_t c : class_of) {
            if (c >= k)
                throw Error(ErrorKind::invalid_argument, "class index " + std::to_string(c) + " with k=" + std::to_string(k));
            ++sizes[c];
        }
        for (std::size_t c = 0; c < k; ++c)
            if (sizes[c] == 0)
                throw Error(ErrorKind::invalid_argument, "class " + std::to_string(c + 1) + " is empty");
        MccInstance m;
        m.graph_ = std::move(graph);
        m.class_of_ = std::move(class_of);
        m.k_ = k;
        return m;
    }

    const WeightedGraph& graph() const noexcept { return graph_; }
    const std::vector<std::size_t>& class_of() const noexcept { return class_of_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t order() const noexcept { return graph_.order(); }

    /// Members of every class, ascending.
    std::vector<std::vector<Vertex>> classes() const
    {
        std::vector<std::vector<Vertex>> out(k_);
        for (Vertex v = 0; v < class_of_.size(); ++v)
            out[class_of_[v]].push_back(v);
        return out;
    }

    /// Cross-class non-adjacent pairs (u < v), ordered by u then v.
    std::vector<std::pair<Vertex, Vertex>> cross_non_edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = u + 1; v < order(); ++v)
                if (class_of_[u] != class_of_[v] && !graph_.has_edge(u, v))
                    out.emplace_back(u, v);
        return out;
    }

private:
    WeightedGraph graph_;
    std::vector<std::size_t> class_of_;
    std::size_t k_ = 0;
};

inline bool is_multicolored_clique(const MccInstance& mcc, const std::vector<Vertex>& set)
{
    if (set.size() != mcc.k())
        return false;
    std::vector<bool> hit(mcc.k(), false);
    for (const Vertex v : set) {
        if (v >= mcc.order() || hit[mcc.class_of()[v]])
            return false;
        hit[mcc.class_of()[v]] = true;
    }
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!mcc.graph().has_edge(set[a], set[b]))
                return false;
    return true;
}

/// Dominating-set input: connected bipartite unit graph without isolated
/// vertices and a size bound.
struct DsInstance {
    WeightedGraph graph;
    std::size_t k = 0;

    static DsInstance make(WeightedGraph graph, std::size_t k)
    {
        if (!graph.unit())
            throw Error(ErrorKind::invalid_argument, "dominating-set graph must be unweighted");
        for (Vertex v = 0; v < graph.order(); ++v)
            if (graph.degree(v) == 0)
                throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " is isolated");
        if (!is_bipartite(graph))
            throw Error(ErrorKind::not_bipartite, "dominating-set graph has an odd cycle");
        if (!is_connected(graph))
            throw Error(ErrorKind::disconnected, "dominating-set graph must be connected");
        if (k < 1)
            throw Error(ErrorKind::invalid_argument, "k must be at least 1");
        return {std::move(graph), k};
    }
};

enum class RoleKind { original, apex, anchor_plus, anchor_minus, leaf, leaf_plus, leaf_minus, non_edge, subdivision };

/// What a point of a reduced instance stands for. Class indices are 1-based
/// as in the weight formulas; vertex indices are those of the source graph.
struct Role {
    RoleKind kind = RoleKind::original;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::uint64_t third = 0;

    friend bool operator==(const Role&, const Role&) = default;
};

/// "role-tag params" as written to roles files.
inline std::string to_string(const Role& r)
{
    auto num = [](std::uint64_t x) { return std::to_string(x); };
    switch (r.kind) {
    case RoleKind::original: return "original " + num(r.first);
    case RoleKind::apex: return "apex " + num(r.first);
    case RoleKind::anchor_plus: return "anchor+ " + num(r.first);
    case RoleKind::anchor_minus: return "anchor- " + num(r.first);
    case RoleKind::leaf: return "leaf " + num(r.first) + " " + num(r.second);
    case RoleKind::leaf_plus: return "leaf+ " + num(r.first) + " " + num(r.second);
    case RoleKind::leaf_minus: return "leaf- " + num(r.first) + " " + num(r.second);
    case RoleKind::non_edge: return "nonedge " + num(r.first) + " " + num(r.second);
    case RoleKind::subdivision: return "subdivision " + num(r.first) + " " + num(r.second) + " " + num(r.third);
    }
    return "unknown";
}

struct ReductionMeta {
    std::string id;
    std::size_t k_source = 0;
    std::size_t n_per_class = 0; ///< common class size after padding; 0 when unused
    Distance budget = 0;
    std::vector<Distance> omega_plus;  ///< per class, 1-based i at index i-1
    std::vector<Distance> omega_minus;
};

struct ReductionArtifact {
    MsrInstance instance;
    std::vector<Role> roles;
    ReductionMeta meta;
    MccInstance source; ///< the clique input the reduction consumed (padded for the anchor constructions)
};

/// Leaf weights of the anchor construction. The published weights let an
/// anchor pair cover its whole class and all of its non-edge vertices at
/// exactly the per-class budget (plus radius = plus leaf weight), which turns
/// every input into a yes-instance; the repaired weights put the plus leaves
/// one further out so the plus radius must reach some class vertex.
enum class AnchorLeafWeights { repaired, as_published };

namespace detail {

inline Weight checked_mul(Weight a, Weight b)
{
    if (a != 0 && b > kMaxTotalWeight / a)
        throw Error(ErrorKind::weight_overflow, "construction weight exceeds 2^62");
    return a * b;
}

inline Weight pow2(std::size_t e)
{
    if (e > 61)
        throw Error(ErrorKind::weight_overflow, "construction weight 2^" + std::to_string(e) + " exceeds 2^62");
    return Weight{1} << e;
}

inline void require_bipartite(const WeightedGraph& g, const char* what)
{
    if (!is_bipartite(g))
        throw std::logic_error(std::string(what) + " produced a non-bipartite graph");
}

} // namespace detail

inline Weight omega_plus(std::size_t i, std::size_t n) { return detail::checked_mul(detail::checked_mul(detail::pow2(2 * i), i), n); }
inline Weight omega_minus(std::size_t i, std::size_t n) { return detail::checked_mul(detail::checked_mul(detail::pow2(2 * i + 1), i), n); }

/// Pads every class with fresh isolated vertices up to the largest class
/// size. Pads are appended after the existing vertices, class by class.
inline MccInstance normalize_mcc(const MccInstance& mcc)
{
    if (mcc.k() < 2)
        throw Error(ErrorKind::invalid_argument, "clique reductions need k >= 2");
    const auto classes = mcc.classes();
    std::size_t n = 0;
    for (const auto& c : classes)
        n = std::max(n, c.size());
    auto class_of = mcc.class_of();
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t pad = classes[c].size(); pad < n; ++pad)
            class_of.push_back(c);
    std::vector<Edge> edges(mcc.graph().edges().begin(), mcc.graph().edges().end());
    auto graph = build_graph(class_of.size(), std::move(edges));
    return MccInstance::make(std::move(graph), std::move(class_of), mcc.k());
}

/// Clique input to a weighted bipartite Standard instance with budget
/// 2^{k+1} - 2: apex per class at weight 2^{i-1}, k+1 leaves per class at 2^i,
/// and a vertex for each cross-class non-edge joined to the other members of
/// both endpoint classes.
inline ReductionArtifact reduce_mcc_weighted_bipartite(const MccInstance& mcc)
{
    const std::size_t k = mcc.k();
    if (k < 2)
        throw Error(ErrorKind::invalid_argument, "clique reductions need k >= 2");
    detail::pow2(k + 1);
    const auto classes = mcc.classes();
    const auto non_edges = mcc.cross_non_edges();
    const auto& cls = mcc.class_of();
    for (const auto& [u, v] : non_edges)
        if (classes[cls[u]].size() == 1 && classes[cls[v]].size() == 1)
            throw Error(ErrorKind::trivial_no,
                "non-edge {" + std::to_string(u) + "," + std::to_string(v) + "} joins two singleton classes");

    const std::size_t originals = mcc.order();
    const std::size_t apex0 = originals;
    const std::size_t leaf0 = apex0 + k;
    const std::size_t nonedge0 = leaf0 + k * (k + 1);
    const std::size_t total = nonedge0 + non_edges.size();

    std::vector<Role> roles(total);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < originals; ++v)
        roles[v] = {RoleKind::original, v};
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t i = c + 1;
        const auto apex = static_cast<Vertex>(apex0 + c);
        roles[apex] = {RoleKind::apex, i};
        for (const Vertex v : classes[c])
            edges.push_back({apex, v, detail::pow2(i - 1)});
        for (std::size_t l = 0; l <= k; ++l) {
            const auto leaf = static_cast<Vertex>(leaf0 + c * (k + 1) + l);
            roles[leaf] = {RoleKind::leaf, i, l + 1};
            for (const Vertex v : classes[c])
                edges.push_back({leaf, v, detail::pow2(i)});
        }
    }
    for (std::size_t e = 0; e < non_edges.size(); ++e) {
        const auto [u, v] = non_edges[e];
        const auto w = static_cast<Vertex>(nonedge0 + e);
        roles[w] = {RoleKind::non_edge, u, v};
        for (const Vertex end : {u, v})
            for (const Vertex a : classes[cls[end]])
                if (a != u && a != v)
                    edges.push_back({w, a, detail::pow2(cls[end] + 1)});
    }

    auto graph = build_graph(total, std::move(edges));
    detail::require_bipartite(graph, "weighted bipartite reduction");
    const Distance budget = detail::pow2(k + 1) - 2;
    ReductionArtifact out;
    out.instance = MsrInstance::make(std::move(graph), k, budget, Variant::standard());
    out.roles = std::move(roles);
    out.meta = {"thm1", k, 0, budget, {}, {}};
    out.source = mcc;
    return out;
}

/// True when every edge of the instance graph is a shortest path between
/// its endpoints.
inline bool edges_are_shortest(const MsrInstance& inst)
{
    for (const Edge& e : inst.graph().edges())
        if (inst.metric().at(e.u, e.v) != e.w)
            return false;
    return true;
}

/// Clique input to a Standard instance with 2k clusters whose anchors form a
/// vertex cover. Classes are padded to a common size n first.
inline ReductionArtifact reduce_mcc_vertex_cover(const MccInstance& input,
    AnchorLeafWeights leaf_weights = AnchorLeafWeights::repaired)
{
    const MccInstance mcc = normalize_mcc(input);
    const std::size_t k = mcc.k();
    const auto classes = mcc.classes();
    const std::size_t n = classes[0].size();
    const auto non_edges = mcc.cross_non_edges();
    const auto& cls = mcc.class_of();

    std::vector<Weight> plus(k), minus(k);
    Distance budget = detail::checked_mul(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        plus[c] = omega_plus(c + 1, n);
        minus[c] = omega_minus(c + 1, n);
        budget += plus[c] + minus[c];
        if (budget > kMaxTotalWeight)
            throw Error(ErrorKind::weight_overflow, "budget exceeds 2^62");
    }
    // position of each original vertex inside its class, 1-based
    std::vector<Weight> position(mcc.order());
    for (const auto& members : classes)
        for (std::size_t h = 0; h < members.size(); ++h)
            position[members[h]] = h + 1;

    const std::size_t originals = mcc.order();
    const std::size_t anchor0 = originals;
    const std::size_t leaf0 = anchor0 + 2 * k;
    const std::size_t leaves_per_set = 2 * k + 1;
    const std::size_t nonedge0 = leaf0 + 2 * k * leaves_per_set;
    const std::size_t total = nonedge0 + non_edges.size();
    auto anchor_plus = [&](std::size_t c) { return static_cast<Vertex>(anchor0 + 2 * c); };
    auto anchor_minus = [&](std::size_t c) { return static_cast<Vertex>(anchor0 + 2 * c + 1); };
    const Weight plus_leaf_extra = leaf_weights == AnchorLeafWeights::repaired ? 1 : 0;

    std::vector<Role> roles(total);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < originals; ++v)
        roles[v] = {RoleKind::original, v};
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t i = c + 1;
        roles[anchor_plus(c)] = {RoleKind::anchor_plus, i};
        roles[anchor_minus(c)] = {RoleKind::anchor_minus, i};
        for (std::size_t l = 0; l < leaves_per_set; ++l) {
            const auto leaf = static_cast<Vertex>(leaf0 + 2 * c * leaves_per_set + l);
            roles[leaf] = {RoleKind::leaf_plus, i, l + 1};
            edges.push_back({anchor_plus(c), leaf, plus[c] + plus_leaf_extra});
        }
        for (std::size_t l = 0; l < leaves_per_set; ++l) {
            const auto leaf = static_cast<Vertex>(leaf0 + (2 * c + 1) * leaves_per_set + l);
            roles[leaf] = {RoleKind::leaf_minus, i, l + 1};
            edges.push_back({anchor_minus(c), leaf, minus[c]});
        }
        for (const Vertex v : classes[c]) {
            edges.push_back({anchor_plus(c), v, position[v] + plus[c]});
            edges.push_back({anchor_minus(c), v, n - position[v] + 1 + minus[c]});
        }
    }
    for (std::size_t e = 0; e < non_edges.size(); ++e) {
        const auto [u, v] = non_edges[e];
        const auto w = static_cast<Vertex>(nonedge0 + e);
        roles[w] = {RoleKind::non_edge, u, v};
        for (const Vertex end : {u, v}) {
            const std::size_t c = cls[end];
            edges.push_back({anchor_plus(c), w, position[end] + 1 + plus[c]});
            edges.push_back({anchor_minus(c), w, n - position[end] + 1 + minus[c]});
        }
    }

    auto graph = build_graph(total, std::move(edges));
    detail::require_bipartite(graph, "vertex-cover reduction");
    ReductionArtifact out;
    out.instance = MsrInstance::make(std::move(graph), 2 * k, budget, Variant::standard());
    if (!edges_are_shortest(out.instance))
        throw std::logic_error("vertex-cover reduction has an edge longer than the distance it spans");
    out.roles = std::move(roles);
    out.meta = {leaf_weights == AnchorLeafWeights::repaired ? "thm2" : "thm2-published", k, n, budget,
        std::vector<Distance>(plus.begin(), plus.end()), std::vector<Distance>(minus.begin(), minus.end())};
    out.source = mcc;
    return out;
}

/// Anchor points of an anchor-construction artifact, ascending.
inline std::vector<Vertex> anchor_points(const ReductionArtifact& a)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < a.roles.size(); ++v)
        if (a.roles[v].kind == RoleKind::anchor_plus || a.roles[v].kind == RoleKind::anchor_minus)
            out.push_back(v);
    return out;
}

/// Fills every non-adjacent pair with an edge of weight budget + 1.
inline MsrInstance augment_complete(const MsrInstance& inst)
{
    if (!inst.delta())
        throw Error(ErrorKind::invalid_argument, "augmentation needs a budget");
    const Weight fill = *inst.delta() + 1;
    const auto& g = inst.graph();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                edges.push_back({u, v, fill});
    return MsrInstance::make(build_graph(g.order(), std::move(edges)), inst.k(), inst.delta(), inst.variant());
}

/// Fills every non-adjacent pair across the bipartition with an edge of
/// weight budget + 1.
inline MsrInstance augment_complete_bipartite(const MsrInstance& inst)
{
    if (!inst.delta())
        throw Error(ErrorKind::invalid_argument, "augmentation needs a budget");
    const auto& g = inst.graph();
    const auto sides = is_bipartite(g);
    if (!sides)
        throw Error(ErrorKind::not_bipartite, "complete-bipartite augmentation needs a bipartite graph");
    const Weight fill = *inst.delta() + 1;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if ((*sides)[u] != (*sides)[v] && !g.has_edge(u, v))
                edges.push_back({u, v, fill});
    return MsrInstance::make(build_graph(g.order(), std::move(edges)), inst.k(), inst.delta(), inst.variant());
}

inline bool is_complete(const WeightedGraph& g)
{
    return g.edges().size() == g.order() * (g.order() - (g.order() > 0 ? 1 : 0)) / 2;
}

inline bool is_complete_bipartite(const WeightedGraph& g)
{
    const auto sides = is_bipartite(g);
    if (!sides)
        return false;
    std::size_t left = 0;
    for (const auto s : *sides)
        left += s == 0;
    return g.edges().size() == left * (g.order() - left);
}

/// Dominating set to Exact instance (X, d, k, k). Distinct centres cannot
/// exceed the point count, so k is capped at n; with k >= n both sides are
/// yes-instances.
inline MsrInstance reduce_ds_to_exact(const DsInstance& ds)
{
    const std::size_t k = std::min(ds.k, ds.graph.order());
    return MsrInstance::make(ds.graph, k, static_cast<Distance>(k), Variant::exact_nonzero());
}

namespace detail {

inline ReductionArtifact subdivide_artifact(const ReductionArtifact& weighted, std::vector<Vertex> allowed,
    std::string id, std::size_t vertex_cap)
{
    const auto sub = subdivide_to_unit_traced(weighted.instance.graph(), vertex_cap);
    ReductionArtifact out;
    out.roles = weighted.roles;
    for (const auto& o : sub.origin) {
        const Edge& e = weighted.instance.graph().edges()[o.edge];
        out.roles.push_back({RoleKind::subdivision, e.u, e.v, o.position});
    }
    out.instance = MsrInstance::make(sub.graph, weighted.instance.k(), weighted.instance.delta(),
        Variant::allowed_centers(std::move(allowed)));
    out.meta = weighted.meta;
    out.meta.id = std::move(id);
    out.source = weighted.source;
    return out;
}

} // namespace detail

/// Unit-weight AllowedCenters instance: the weighted bipartite reduction
/// with every edge subdivided, centres restricted to the clique graph's
/// vertices.
inline ReductionArtifact reduce_mcc_allowed_kdelta(const MccInstance& mcc, std::size_t vertex_cap = kDefaultSubdivisionCap)
{
    const auto weighted = reduce_mcc_weighted_bipartite(mcc);
    std::vector<Vertex> allowed(mcc.order());
    for (Vertex v = 0; v < allowed.size(); ++v)
        allowed[v] = v;
    return detail::subdivide_artifact(weighted, std::move(allowed), "thm5", vertex_cap);
}

/// Unit-weight AllowedCenters instance: the anchor construction with every
/// edge subdivided, centres restricted to the 2k anchors.
inline ReductionArtifact reduce_mcc_allowed_fvs(const MccInstance& mcc, std::size_t vertex_cap = kDefaultSubdivisionCap,
    AnchorLeafWeights leaf_weights = AnchorLeafWeights::repaired)
{
    const auto weighted = reduce_mcc_vertex_cover(mcc, leaf_weights);
    auto out = detail::subdivide_artifact(weighted, anchor_points(weighted), "thm6", vertex_cap);
    std::vector<bool> removed(out.instance.size(), false);
    for (const Vertex a : out.instance.variant().allowed)
        removed[a] = true;
    if (!is_forest_after_removal(out.instance.graph(), removed))
        throw std::logic_error("anchors do not meet every cycle");
    return out;
}

/// Outcome of mapping a clustering back to a clique.
struct CliqueExtraction {
    std::vector<Vertex> clique; ///< source vertices, one per class in class order
    std::string failure;        ///< empty on success

    bool ok() const noexcept { return failure.empty(); }
};

/// Centres of a weighted-bipartite-reduction clustering, read as clique
/// vertices: each must be an original vertex and each class hit once.
inline CliqueExtraction extract_clique_thm1(const ReductionArtifact& a, const Clustering& c)
{
    CliqueExtraction out;
    const std::size_t k = a.source.k();
    std::vector<std::optional<Vertex>> pick(k);
    for (const auto& p : c.pairs) {
        if (p.center >= a.roles.size())
            return {{}, "center " + std::to_string(p.center) + " out of range"};
        const Role& r = a.roles[p.center];
        if (r.kind != RoleKind::original)
            return {{}, "center " + std::to_string(p.center) + " has role '" + to_string(r) + "', not an original vertex"};
        const std::size_t cls = a.source.class_of()[r.first];
        if (pick[cls])
            return {{}, "class " + std::to_string(cls + 1) + " holds two centers"};
        pick[cls] = static_cast<Vertex>(r.first);
    }
    for (std::size_t cls = 0; cls < k; ++cls) {
        if (!pick[cls])
            return {{}, "class " + std::to_string(cls + 1) + " holds no center"};
        out.clique.push_back(*pick[cls]);
    }
    return out;
}

/// Reads h_i off the plus-anchor radius of every class (h_i = r - omega+)
/// and returns the h_i-th member of each class.
inline CliqueExtraction extract_clique_thm2(const ReductionArtifact& a, const Clustering& c)
{
    const std::size_t k = a.source.k();
    const std::size_t n = a.meta.n_per_class;
    const auto classes = a.source.classes();
    std::vector<std::optional<Distance>> plus_radius(k);
    for (const auto& p : c.pairs) {
        if (p.center >= a.roles.size())
            return {{}, "center " + std::to_string(p.center) + " out of range"};
        const Role& r = a.roles[p.center];
        if (r.kind == RoleKind::anchor_plus)
            plus_radius[r.first - 1] = p.radius;
        else if (r.kind != RoleKind::anchor_minus)
            return {{}, "center " + std::to_string(p.center) + " has role '" + to_string(r) + "', not an anchor"};
    }
    CliqueExtraction out;
    for (std::size_t cls = 0; cls < k; ++cls) {
        if (!plus_radius[cls])
            return {{}, "class " + std::to_string(cls + 1) + " has no plus anchor center"};
        const Distance r = *plus_radius[cls];
        const Distance base = a.meta.omega_plus[cls];
        if (r <= base || r - base > n)
            return {{}, "class " + std::to_string(cls + 1) + ": plus radius " + std::to_string(r) + " gives index outside [1," + std::to_string(n) + "]"};
        out.clique.push_back(classes[cls][r - base - 1]);
    }
    return out;
}

/// Forward certificate for the weighted bipartite reduction: each clique
/// vertex of class i with radius 2^i.
inline Clustering certificate_thm1(const ReductionArtifact& a, const std::vector<Vertex>& clique)
{
    Clustering c;
    for (const Vertex v : clique)
        c.pairs.push_back({v, detail::pow2(a.source.class_of().at(v) + 1)});
    return normalize_clustering(std::move(c));
}

/// Forward certificate for the anchor construction: for the clique vertex
/// at position h of class i, radii h + omega+(i) and n - h + omega-(i).
inline Clustering certificate_thm2(const ReductionArtifact& a, const std::vector<Vertex>& clique)
{
    const std::size_t n = a.meta.n_per_class;
    const auto classes = a.source.classes();
    const auto anchors = anchor_points(a);
    Clustering c;
    for (const Vertex v : clique) {
        const std::size_t cls = a.source.class_of().at(v);
        const auto& members = classes[cls];
        const Distance h = static_cast<Distance>(std::find(members.begin(), members.end(), v) - members.begin()) + 1;
        c.pairs.push_back({anchors[2 * cls], h + a.meta.omega_plus[cls]});
        c.pairs.push_back({anchors[2 * cls + 1], n - h + a.meta.omega_minus[cls]});
    }
    return normalize_clustering(std::move(c));
}

} // namespace msr
