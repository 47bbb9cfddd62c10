#pragma once

#include "msr/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msr {

enum class VariantKind { standard, exact_nonzero, allowed_centers };

inline std::string_view to_string(VariantKind kind)
{
    switch (kind) {
    case VariantKind::standard: return "standard";
    case VariantKind::exact_nonzero: return "exact";
    case VariantKind::allowed_centers: return "allowed";
    }
    return "unknown";
}

struct Variant {
    VariantKind kind = VariantKind::standard;
    std::vector<Vertex> allowed; ///< sorted, unique; used only by allowed_centers

    static Variant standard() { return {}; }
    static Variant exact_nonzero() { return {VariantKind::exact_nonzero, {}}; }
    static Variant allowed_centers(std::vector<Vertex> centers)
    {
        std::sort(centers.begin(), centers.end());
        centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
        return {VariantKind::allowed_centers, std::move(centers)};
    }

    friend bool operator==(const Variant&, const Variant&) = default;
};

/// An MSR instance: the graph, the metric it induces, the cluster bound k,
/// an optional budget and the variant. Pairs of points in different
/// components sit at infinite distance.
class MsrInstance {
public:
    MsrInstance() = default;

    static MsrInstance make(WeightedGraph graph, std::size_t k, std::optional<Distance> delta, Variant variant)
    {
        if (k < 1)
            throw Error(ErrorKind::invalid_argument, "k must be at least 1");
        if (graph.order() == 0)
            throw Error(ErrorKind::invalid_argument, "instance needs at least one point");
        if (variant.kind == VariantKind::allowed_centers) {
            if (variant.allowed.empty())
                throw Error(ErrorKind::invalid_argument, "allowed-centers variant needs a nonempty centre set");
            if (variant.allowed.back() >= graph.order())
                throw Error(ErrorKind::vertex_out_of_range, "allowed centre " + std::to_string(variant.allowed.back()));
        } else {
            variant.allowed.clear();
        }
        MsrInstance inst;
        inst.metric_ = shortest_path_metric(graph, Connectivity::allow_disconnected);
        inst.graph_ = std::move(graph);
        inst.k_ = k;
        inst.delta_ = delta;
        inst.variant_ = std::move(variant);
        return inst;
    }

    const WeightedGraph& graph() const noexcept { return graph_; }
    const MetricSpace& metric() const noexcept { return metric_; }
    std::size_t size() const noexcept { return metric_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::optional<Distance> delta() const noexcept { return delta_; }
    const Variant& variant() const noexcept { return variant_; }
    VariantKind kind() const noexcept { return variant_.kind; }

    /// Points that may serve as centres, ascending.
    std::vector<Vertex> eligible_centers() const
    {
        if (variant_.kind == VariantKind::allowed_centers)
            return variant_.allowed;
        std::vector<Vertex> all(size());
        for (Vertex v = 0; v < all.size(); ++v)
            all[v] = v;
        return all;
    }

    MsrInstance with_delta(std::optional<Distance> delta) const
    {
        MsrInstance copy = *this;
        copy.delta_ = delta;
        return copy;
    }

private:
    WeightedGraph graph_;
    MetricSpace metric_;
    std::size_t k_ = 1;
    std::optional<Distance> delta_;
    Variant variant_;
};

struct ClusterPair {
    Vertex center = 0;
    Distance radius = 0;

    friend auto operator<=>(const ClusterPair&, const ClusterPair&) = default;
};

struct Clustering {
    std::vector<ClusterPair> pairs;

    Distance cost() const
    {
        Distance sum = 0;
        for (const auto& p : pairs)
            sum = (p.radius > kInfinity - sum) ? kInfinity : sum + p.radius;
        return sum;
    }

    friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Sorts pairs by centre and merges pairs sharing a centre into one pair with
/// the larger radius. The merged pair's ball contains both originals, so
/// coverage is kept and the cost does not grow.
inline Clustering normalize_clustering(Clustering c)
{
    std::map<Vertex, Distance> merged;
    for (const auto& p : c.pairs) {
        auto [it, inserted] = merged.emplace(p.center, p.radius);
        if (!inserted)
            it->second = std::max(it->second, p.radius);
    }
    Clustering out;
    for (const auto& [center, radius] : merged)
        out.pairs.push_back({center, radius});
    return out;
}

/// True when every point lies in some ball of the clustering.
inline bool covers_all(const MetricSpace& m, const Clustering& c)
{
    for (Vertex p = 0; p < m.size(); ++p) {
        const bool covered = std::any_of(c.pairs.begin(), c.pairs.end(), [&](const ClusterPair& cp) {
            return cp.center < m.size() && m.at(cp.center, p) <= cp.radius;
        });
        if (!covered)
            return false;
    }
    return true;
}

enum class VerdictReason {
    valid,
    empty,
    center_out_of_range,
    duplicate_center,
    too_many_pairs,
    wrong_pair_count,
    center_not_allowed,
    singleton_ball,
    uncovered_point,
    over_budget,
};

inline std::string_view to_string(VerdictReason r)
{
    switch (r) {
    case VerdictReason::valid: return "valid";
    case VerdictReason::empty: return "empty-clustering";
    case VerdictReason::center_out_of_range: return "center-out-of-range";
    case VerdictReason::duplicate_center: return "duplicate-center";
    case VerdictReason::too_many_pairs: return "too-many-pairs";
    case VerdictReason::wrong_pair_count: return "wrong-pair-count";
    case VerdictReason::center_not_allowed: return "center-not-allowed";
    case VerdictReason::singleton_ball: return "singleton-ball";
    case VerdictReason::uncovered_point: return "uncovered-point";
    case VerdictReason::over_budget: return "over-budget";
    }
    return "unknown";
}

struct Verdict {
    VerdictReason reason = VerdictReason::valid;
    std::string detail;

    bool valid() const noexcept { return reason == VerdictReason::valid; }
};

inline Verdict verify_clustering(const MsrInstance& inst, const Clustering& c)
{
    const auto& m = inst.metric();
    auto fail = [](VerdictReason r, std::string detail) { return Verdict{r, std::move(detail)}; };

    if (c.pairs.empty())
        return fail(VerdictReason::empty, "no center-radius pairs");
    std::vector<bool> seen(m.size(), false);
    for (const auto& p : c.pairs) {
        if (p.center >= m.size())
            return fail(VerdictReason::center_out_of_range, "center " + std::to_string(p.center));
        if (seen[p.center])
            return fail(VerdictReason::duplicate_center, "center " + std::to_string(p.center) + " appears twice");
        seen[p.center] = true;
    }
    if (inst.kind() == VariantKind::exact_nonzero) {
        if (c.pairs.size() != inst.k())
            return fail(VerdictReason::wrong_pair_count,
                std::to_string(c.pairs.size()) + " pairs, exactly " + std::to_string(inst.k()) + " required");
    } else if (c.pairs.size() > inst.k()) {
        return fail(VerdictReason::too_many_pairs,
            std::to_string(c.pairs.size()) + " pairs, at most " + std::to_string(inst.k()) + " allowed");
    }
    if (inst.kind() == VariantKind::allowed_centers) {
        for (const auto& p : c.pairs)
            if (!std::binary_search(inst.variant().allowed.begin(), inst.variant().allowed.end(), p.center))
                return fail(VerdictReason::center_not_allowed, "center " + std::to_string(p.center));
    }
    if (inst.kind() == VariantKind::exact_nonzero) {
        for (const auto& p : c.pairs)
            if (nearest_other(m, p.center) > p.radius)
                return fail(VerdictReason::singleton_ball,
                    "ball (" + std::to_string(p.center) + "," + std::to_string(p.radius) + ") covers fewer than two points");
    }
    for (Vertex v = 0; v < m.size(); ++v) {
        const bool covered = std::any_of(c.pairs.begin(), c.pairs.end(),
            [&](const ClusterPair& cp) { return m.at(cp.center, v) <= cp.radius; });
        if (!covered)
            return fail(VerdictReason::uncovered_point, "point " + std::to_string(v));
    }
    if (inst.delta() && c.cost() > *inst.delta())
        return fail(VerdictReason::over_budget,
            "cost " + std::to_string(c.cost()) + " exceeds budget " + std::to_string(*inst.delta()));
    return {};
}

} // namespace msr
