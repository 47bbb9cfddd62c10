#pragma once

#include "msr/instance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace msr {

enum class SolveStatus { optimal, infeasible, timeout };
enum class Algorithm { cover_dp, branch_bound, enumerate };

inline std::string_view to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::timeout: return "timeout";
    }
    return "unknown";
}

inline std::string_view to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::cover_dp: return "cover-dp";
    case Algorithm::branch_bound: return "branch-bound";
    case Algorithm::enumerate: return "enumerate";
    }
    return "unknown";
}

struct SolveOptions {
    std::size_t dp_max_points = 22;
    /// table cells allowed for the exact-count DP: (n+1)(k+1)2^n
    std::size_t exact_dp_max_cells = std::size_t{1} << 23;
    /// zero disables the limit
    std::chrono::milliseconds timeout{60'000};
    /// truncate candidate radii at the budget when one is present
    bool prune_radii = true;
    /// rewrite the witness to the smallest one in (pair count, centres, radii) order
    bool canonicalize = true;
    std::size_t canonical_max_center_sets = 200'000;
    std::size_t enumerate_max_center_sets = 200'000;
};

struct SolveReport {
    SolveStatus status = SolveStatus::infeasible;
    Distance optimal_cost = kInfinity;
    Clustering clustering;
    Algorithm algorithm = Algorithm::cover_dp;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};

    bool optimal() const noexcept { return status == SolveStatus::optimal; }
};

struct RadiiChoice {
    std::vector<Distance> radii;
    Distance cost = 0;
};

namespace detail {

inline Distance sat_add(Distance a, Distance b) { return b > kInfinity - a ? kInfinity : a + b; }

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds limit)
        : start_(std::chrono::steady_clock::now()), limit_(limit)
    {
    }
    bool expired() const
    {
        return limit_.count() > 0 && std::chrono::steady_clock::now() - start_ > limit_;
    }
    std::chrono::duration<double> elapsed() const { return std::chrono::steady_clock::now() - start_; }

private:
    std::chrono::steady_clock::time_point start_;
    std::chrono::milliseconds limit_;
};

inline Distance radius_cap(const MsrInstance& inst, const SolveOptions& opts)
{
    return (opts.prune_radii && inst.delta()) ? *inst.delta() : kInfinity;
}

/// Costs must stay strictly below this.
inline Distance cost_limit(const MsrInstance& inst)
{
    return inst.delta() ? sat_add(*inst.delta(), 1) : kInfinity;
}

inline Distance min_radius(const MetricSpace& m, Vertex c, bool nonzero) { return nonzero ? nearest_other(m, c) : 0; }

/// True when the exact-count variant has no solution for size reasons alone.
inline bool exact_trivially_infeasible(const MsrInstance& inst)
{
    return inst.kind() == VariantKind::exact_nonzero && (inst.k() > inst.size() || inst.size() < 2);
}

/// (distance, point) pairs within `cap` of c, nearest first.
inline std::vector<std::pair<Distance, Vertex>> sorted_reach(const MetricSpace& m, Vertex c, Distance cap)
{
    std::vector<std::pair<Distance, Vertex>> out;
    for (Vertex p = 0; p < m.size(); ++p)
        if (const Distance d = m.at(c, p); d <= cap)
            out.emplace_back(d, p);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of centre sets the enumeration would visit, saturating at `limit + 1`.
inline std::size_t count_center_sets(std::size_t eligible, std::size_t k, bool exact, std::size_t limit)
{
    if (exact && k > eligible)
        return 0;
    double binom = 1; // C(eligible, s)
    double total = 0;
    for (std::size_t s = 1; s <= std::min(k, eligible); ++s) {
        binom = binom * static_cast<double>(eligible - s + 1) / static_cast<double>(s);
        if (!exact || s == k)
            total += binom;
        if (total > static_cast<double>(limit))
            return limit + 1;
    }
    return static_cast<std::size_t>(total + 0.5);
}

/// Depth-first search over radius vectors for a fixed centre list. Radii are
/// tried in ascending order and the last one is forced to the smallest value
/// covering what is left, so the first vector found under a bound is the
/// lexicographically smallest among those of minimum cost.
class RadiiSearch {
public:
    RadiiSearch(const MetricSpace& m, std::span<const Vertex> centers, Distance cap, bool nonzero)
        : m_(m), centers_(centers.begin(), centers.end()), cap_(cap)
    {
        lo_.reserve(centers_.size());
        reach_.reserve(centers_.size());
        for (const Vertex c : centers_) {
            lo_.push_back(min_radius(m, c, nonzero));
            reach_.push_back(sorted_reach(m, c, cap));
        }
        cover_.assign(m.size(), 0);
        uncovered_ = m.size();
        current_.assign(centers_.size(), 0);
    }

    /// Best radius vector with cost strictly below `bound`.
    std::optional<RadiiChoice> run(Distance bound, bool stop_at_first, std::uint64_t& nodes)
    {
        if (centers_.empty())
            return std::nullopt;
        for (const Distance lo : lo_)
            if (lo > cap_)
                return std::nullopt;
        best_ = bound;
        found_ = false;
        stop_at_first_ = stop_at_first;
        nodes_ = &nodes;
        suffix_lo_.assign(centers_.size() + 1, 0);
        for (std::size_t i = centers_.size(); i-- > 0;)
            suffix_lo_[i] = sat_add(suffix_lo_[i + 1], lo_[i]);
        dfs(0, 0);
        if (!found_)
            return std::nullopt;
        return RadiiChoice{best_radii_, best_};
    }

private:
    void add(Vertex p)
    {
        if (cover_[p]++ == 0)
            --uncovered_;
    }
    void remove(Vertex p)
    {
        if (--cover_[p] == 0)
            ++uncovered_;
    }

    void dfs(std::size_t i, Distance spent)
    {
        ++*nodes_;
        if (found_ && stop_at_first_)
            return;
        if (i + 1 == centers_.size()) {
            const Vertex c = centers_[i];
            Distance need = lo_[i];
            for (Vertex p = 0; p < m_.size(); ++p) {
                if (cover_[p])
                    continue;
                const Distance d = m_.at(c, p);
                if (d > cap_)
                    return;
                need = std::max(need, d);
            }
            const Distance total = sat_add(spent, need);
            if (total < best_) {
                best_ = total;
                found_ = true;
                best_radii_ = current_;
                best_radii_[i] = need;
            }
            return;
        }
        const auto& reach = reach_[i];
        std::size_t pos = 0;
        while (pos < reach.size()) {
            const Distance r = reach[pos].first;
            while (pos < reach.size() && reach[pos].first == r)
                add(reach[pos++].second);
            if (r < lo_[i])
                continue;
            const Distance spent_here = sat_add(spent, r);
            if (sat_add(spent_here, suffix_lo_[i + 1]) >= best_)
                break;
            if (sat_add(spent_here, lower_bound(i + 1, spent_here)) >= best_)
                continue;
            current_[i] = r;
            dfs(i + 1, spent_here);
            if (found_ && stop_at_first_)
                break;
        }
        while (pos > 0)
            remove(reach[--pos].second);
    }

    /// Lower bound on the radii still to be paid by centres from..end.
    Distance lower_bound(std::size_t from, Distance spent)
    {
        const std::size_t s = centers_.size();
        forced_.assign(lo_.begin() + static_cast<std::ptrdiff_t>(from), lo_.end());
        const Distance rest_lo = suffix_lo_[from];
        Distance widest_increment = 0;
        for (Vertex p = 0; p < m_.size(); ++p) {
            if (cover_[p])
                continue;
            std::size_t options = 0;
            std::size_t only = 0;
            Distance min_increment = kInfinity;
            for (std::size_t j = from; j < s; ++j) {
                const Distance d = m_.at(centers_[j], p);
                if (d > cap_)
                    continue;
                const Distance r = std::max(lo_[j], d);
                if (sat_add(sat_add(spent, rest_lo - lo_[j]), r) >= best_)
                    continue;
                ++options;
                only = j - from;
                min_increment = std::min(min_increment, r - lo_[j]);
            }
            if (options == 0)
                return kInfinity;
            if (options == 1)
                forced_[only] = std::max(forced_[only], m_.at(centers_[only + from], p));
            widest_increment = std::max(widest_increment, min_increment);
        }
        Distance forced_sum = 0;
        for (const Distance f : forced_)
            forced_sum = sat_add(forced_sum, f);
        return std::max(forced_sum, sat_add(rest_lo, widest_increment));
    }

    const MetricSpace& m_;
    std::vector<Vertex> centers_;
    Distance cap_;
    std::vector<Distance> lo_;
    std::vector<std::vector<std::pair<Distance, Vertex>>> reach_;
    std::vector<std::uint32_t> cover_;
    std::size_t uncovered_ = 0;
    std::vector<Distance> current_;
    std::vector<Distance> suffix_lo_;
    std::vector<Distance> forced_;
    std::vector<Distance> best_radii_;
    Distance best_ = kInfinity;
    bool found_ = false;
    bool stop_at_first_ = false;
    std::uint64_t* nodes_ = nullptr;
};

struct EnumerationResult {
    std::optional<Clustering> best;
    Distance cost = kInfinity;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

/// Visits centre sets by size, then lexicographically, keeping strict
/// improvements only. With `stop_at_first` it returns the first set whose
/// optimal radii cost less than `bound`.
inline EnumerationResult enumerate_center_sets(const MsrInstance& inst, Distance cap, Distance bound,
    bool stop_at_first, const Deadline& deadline)
{
    EnumerationResult out;
    out.cost = bound;
    const auto& m = inst.metric();
    const auto eligible = inst.eligible_centers();
    const bool exact = inst.kind() == VariantKind::exact_nonzero;
    const std::size_t e = eligible.size();
    const std::size_t first = exact ? inst.k() : 1;
    const std::size_t last = std::min(inst.k(), e);

    std::vector<Distance> lo(e);
    for (std::size_t i = 0; i < e; ++i)
        lo[i] = min_radius(m, eligible[i], exact);

    std::vector<Vertex> centers;
    std::uint64_t visited = 0;
    for (std::size_t s = first; s <= last; ++s) {
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            if ((++visited & 255) == 0 && deadline.expired()) {
                out.timed_out = true;
                return out;
            }
            centers.clear();
            Distance lo_sum = 0;
            for (const std::size_t i : idx) {
                centers.push_back(eligible[i]);
                lo_sum = sat_add(lo_sum, lo[i]);
            }
            // every point needs some centre at least as far as its nearest one
            Distance spread = 0;
            for (Vertex p = 0; p < m.size() && spread < out.cost; ++p) {
                Distance nearest = kInfinity;
                for (const Vertex c : centers)
                    nearest = std::min(nearest, m.at(c, p));
                spread = std::max(spread, nearest);
            }
            if (spread < out.cost && spread <= cap && lo_sum < out.cost) {
                RadiiSearch search(m, centers, cap, exact);
                if (auto choice = search.run(out.cost, stop_at_first, out.nodes)) {
                    Clustering c;
                    for (std::size_t i = 0; i < centers.size(); ++i)
                        c.pairs.push_back({centers[i], choice->radii[i]});
                    out.best = std::move(c);
                    out.cost = choice->cost;
                    if (stop_at_first)
                        return out;
                }
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == e - s + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

/// Rewrites an optimal witness into the first one met by the enumeration
/// order, provided the enumeration is small enough.
inline void canonicalize_witness(const MsrInstance& inst, const SolveOptions& opts, SolveReport& report,
    const Deadline& deadline)
{
    if (!opts.canonicalize || report.status != SolveStatus::optimal)
        return;
    const bool exact = inst.kind() == VariantKind::exact_nonzero;
    if (count_center_sets(inst.eligible_centers().size(), inst.k(), exact, opts.canonical_max_center_sets)
        > opts.canonical_max_center_sets)
        return;
    auto res = enumerate_center_sets(inst, radius_cap(inst, opts), sat_add(report.optimal_cost, 1), true, deadline);
    if (res.best && res.cost == report.optimal_cost)
        report.clustering = *res.best;
}

struct Ball {
    std::uint32_t mask = 0;
    Vertex center = 0;
    Distance radius = 0;
};

/// Ball system over eligible centres with radii in [lo, cap]; identical
/// point sets keep only the cheapest ball (then lowest centre).
inline std::vector<Ball> ball_system(const MsrInstance& inst, Distance cap, bool nonzero)
{
    const auto& m = inst.metric();
    std::unordered_map<std::uint32_t, Ball> by_mask;
    for (const Vertex c : inst.eligible_centers()) {
        const Distance lo = min_radius(m, c, nonzero);
        const auto reach = sorted_reach(m, c, cap);
        std::uint32_t mask = 0;
        for (std::size_t pos = 0; pos < reach.size();) {
            const Distance r = reach[pos].first;
            while (pos < reach.size() && reach[pos].first == r)
                mask |= std::uint32_t{1} << reach[pos++].second;
            if (r < lo)
                continue;
            auto [it, inserted] = by_mask.try_emplace(mask, Ball{mask, c, r});
            if (!inserted && std::pair(r, c) < std::pair(it->second.radius, it->second.center))
                it->second = Ball{mask, c, r};
        }
    }
    std::vector<Ball> balls;
    for (const auto& [mask, b] : by_mask)
        balls.push_back(b);
    std::sort(balls.begin(), balls.end(),
        [](const Ball& a, const Ball& b) { return std::tie(a.radius, a.center, a.mask) < std::tie(b.radius, b.center, b.mask); });
    return balls;
}

} // namespace detail

/// Cheapest radii for a fixed list of distinct centres such that every point
/// is covered, radii lie in candidate_radii (truncated at delta) and the
/// total stays within delta. With `nonzero` each ball must hold a second
/// point. Returns none when no such vector exists.
inline std::optional<RadiiChoice> optimal_radii_for_centers(const MetricSpace& m, std::span<const Vertex> centers,
    std::optional<Distance> delta = std::nullopt, bool nonzero = false)
{
    for (const Vertex c : centers)
        check_vertex(m, c);
    std::uint64_t nodes = 0;
    detail::RadiiSearch search(m, centers, delta.value_or(kInfinity), nonzero);
    return search.run(delta ? detail::sat_add(*delta, 1) : kInfinity, false, nodes);
}

/// Layered subset-cover DP over the ball system.
inline SolveReport solve_cover_dp(const MsrInstance& inst, const SolveOptions& opts = {})
{
    const detail::Deadline deadline(opts.timeout);
    const std::size_t n = inst.size();
    const std::size_t k = inst.k();
    const bool exact = inst.kind() == VariantKind::exact_nonzero;
    if (n > std::min<std::size_t>(opts.dp_max_points, 30))
        throw Error(ErrorKind::size_cap, "cover DP needs n <= " + std::to_string(std::min<std::size_t>(opts.dp_max_points, 30)));

    SolveReport report;
    report.algorithm = Algorithm::cover_dp;
    const Distance cap = detail::radius_cap(inst, opts);
    const Distance limit = detail::cost_limit(inst);
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    const auto& m = inst.metric();

    if (exact) {
        if (detail::exact_trivially_infeasible(inst)) {
            report.elapsed = deadline.elapsed();
            return report;
        }
        const std::size_t states = std::size_t{1} << n;
        if ((n + 1) * (k + 1) > opts.exact_dp_max_cells / states)
            throw Error(ErrorKind::size_cap, "exact-count DP table exceeds its cell limit");
        // per centre, its nonzero balls
        std::vector<std::vector<std::pair<Distance, std::uint32_t>>> balls(n);
        for (Vertex c = 0; c < n; ++c) {
            const Distance lo = nearest_other(m, c);
            const auto reach = detail::sorted_reach(m, c, cap);
            std::uint32_t mask = 0;
            for (std::size_t pos = 0; pos < reach.size();) {
                const Distance r = reach[pos].first;
                while (pos < reach.size() && reach[pos].first == r)
                    mask |= std::uint32_t{1} << reach[pos++].second;
                if (r >= lo)
                    balls[c].emplace_back(r, mask);
            }
        }
        // table[c][t][mask]: cheapest way to reach `full` from `mask` using
        // exactly t further centres among c..n-1
        auto at = [&](std::size_t c, std::size_t t, std::uint32_t mask) {
            return (c * (k + 1) + t) * states + mask;
        };
        std::vector<Distance> table((n + 1) * (k + 1) * states, kInfinity);
        table[at(n, 0, full)] = 0;
        for (std::size_t c = n; c-- > 0;) {
            if (deadline.expired()) {
                report.status = SolveStatus::timeout;
                report.elapsed = deadline.elapsed();
                return report;
            }
            for (std::size_t t = 0; t <= k; ++t) {
                for (std::uint32_t mask = 0;; ++mask) {
                    Distance best = table[at(c + 1, t, mask)];
                    if (t > 0) {
                        for (const auto& [r, b] : balls[c]) {
                            if (r >= best)
                                break;
                            const Distance rest = table[at(c + 1, t - 1, mask | b)];
                            if (rest != kInfinity)
                                best = std::min(best, detail::sat_add(r, rest));
                        }
                    }
                    table[at(c, t, mask)] = best;
                    ++report.nodes_explored;
                    if (mask == full)
                        break;
                }
            }
        }
        const Distance cost = table[at(0, k, 0)];
        if (cost >= limit) {
            report.elapsed = deadline.elapsed();
            return report;
        }
        std::uint32_t mask = 0;
        std::size_t t = k;
        for (std::size_t c = 0; c < n && t > 0; ++c) {
            const Distance here = table[at(c, t, mask)];
            for (const auto& [r, b] : balls[c]) {
                const Distance rest = table[at(c + 1, t - 1, mask | b)];
                if (rest != kInfinity && detail::sat_add(r, rest) == here) {
                    report.clustering.pairs.push_back({static_cast<Vertex>(c), r});
                    mask |= b;
                    --t;
                    break;
                }
            }
        }
        report.status = SolveStatus::optimal;
        report.optimal_cost = cost;
        detail::canonicalize_witness(inst, opts, report, deadline);
        report.elapsed = deadline.elapsed();
        return report;
    }

    const auto balls = detail::ball_system(inst, cap, false);
    std::vector<std::vector<const detail::Ball*>> by_point(n);
    for (const auto& b : balls)
        for (std::uint32_t s = b.mask; s; s &= s - 1)
            by_point[std::countr_zero(s)].push_back(&b);

    std::vector<std::unordered_map<std::uint32_t, Distance>> memo(k + 1);
    bool timed_out = false;
    auto cheapest = [&](auto&& self, std::size_t t, std::uint32_t mask) -> Distance {
        if (mask == full)
            return 0;
        if (t == 0 || timed_out)
            return kInfinity;
        if (auto it = memo[t].find(mask); it != memo[t].end())
            return it->second;
        if ((++report.nodes_explored & 1023) == 0 && deadline.expired())
            timed_out = true;
        const int p = std::countr_zero(~mask);
        Distance best = kInfinity;
        for (const detail::Ball* b : by_point[p]) {
            if (b->radius >= best)
                break;
            const Distance rest = self(self, t - 1, mask | b->mask);
            if (rest != kInfinity)
                best = std::min(best, detail::sat_add(b->radius, rest));
        }
        memo[t].emplace(mask, best);
        return best;
    };
    const Distance cost = cheapest(cheapest, k, 0);
    if (timed_out) {
        report.status = SolveStatus::timeout;
        report.elapsed = deadline.elapsed();
        return report;
    }
    if (cost >= limit) {
        report.elapsed = deadline.elapsed();
        return report;
    }
    std::uint32_t mask = 0;
    for (std::size_t t = k; mask != full; --t) {
        const Distance here = cheapest(cheapest, t, mask);
        const int p = std::countr_zero(~mask);
        for (const detail::Ball* b : by_point[p]) {
            const Distance rest = cheapest(cheapest, t - 1, mask | b->mask);
            if (rest != kInfinity && detail::sat_add(b->radius, rest) == here) {
                report.clustering.pairs.push_back({b->center, b->radius});
                mask |= b->mask;
                break;
            }
        }
    }
    report.clustering = normalize_clustering(std::move(report.clustering));
    report.status = SolveStatus::optimal;
    report.optimal_cost = report.clustering.cost();
    detail::canonicalize_witness(inst, opts, report, deadline);
    report.elapsed = deadline.elapsed();
    return report;
}

namespace detail {

/// Point-branching search: the chosen uncovered point is covered either by
/// growing an open centre or by opening a new one.
class BranchBound {
public:
    BranchBound(const MsrInstance& inst, Distance cap, const Deadline& deadline)
        : m_(inst.metric()), eligible_(inst.eligible_centers()), k_(inst.k()),
          exact_(inst.kind() == VariantKind::exact_nonzero), cap_(cap), deadline_(deadline)
    {
        const std::size_t e = eligible_.size();
        lo_.resize(e);
        reach_.resize(e);
        for (std::size_t i = 0; i < e; ++i) {
            lo_[i] = min_radius(m_, eligible_[i], exact_);
            reach_[i] = sorted_reach(m_, eligible_[i], cap);
        }
        open_.assign(e, false);
        radius_.assign(e, 0);
        applied_.assign(e, 0);
        cover_.assign(m_.size(), 0);
        uncovered_ = m_.size();
        by_lo_.resize(e);
        std::iota(by_lo_.begin(), by_lo_.end(), std::size_t{0});
        std::stable_sort(by_lo_.begin(), by_lo_.end(), [&](std::size_t a, std::size_t b) { return lo_[a] < lo_[b]; });
    }

    void run(Distance limit)
    {
        best_ = limit;
        seed_incumbent();
        search();
    }

    bool found() const { return found_; }
    bool timed_out() const { return timed_out_; }
    Distance best() const { return best_; }
    const Clustering& incumbent() const { return incumbent_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    /// Cheapest nonzero pairs for the unopened centres needed to reach k.
    std::optional<std::pair<Distance, std::vector<std::size_t>>> fill_extras(std::size_t need) const
    {
        Distance sum = 0;
        std::vector<std::size_t> picked;
        for (const std::size_t i : by_lo_) {
            if (picked.size() == need)
                break;
            if (open_[i])
                continue;
            if (lo_[i] > cap_)
                return std::nullopt;
            picked.push_back(i);
            sum = sat_add(sum, lo_[i]);
        }
        if (picked.size() < need)
            return std::nullopt;
        return std::pair{sum, std::move(picked)};
    }

    void seed_incumbent()
    {
        for (std::size_t i = 0; i < eligible_.size(); ++i) {
            Distance r = lo_[i];
            for (Vertex p = 0; p < m_.size(); ++p)
                r = std::max(r, m_.at(eligible_[i], p));
            if (r > cap_)
                continue;
            Distance total = r;
            std::vector<std::size_t> extras;
            if (exact_) {
                open_[i] = true;
                auto fill = fill_extras(k_ - 1);
                open_[i] = false;
                if (!fill)
                    continue;
                total = sat_add(total, fill->first);
                extras = std::move(fill->second);
            }
            if (total < best_) {
                best_ = total;
                found_ = true;
                incumbent_.pairs.clear();
                incumbent_.pairs.push_back({eligible_[i], r});
                for (const std::size_t x : extras)
                    incumbent_.pairs.push_back({eligible_[x], lo_[x]});
            }
        }
    }

    std::size_t raise(std::size_t i, Distance r)
    {
        const std::size_t before = applied_[i];
        auto& reach = reach_[i];
        while (applied_[i] < reach.size() && reach[applied_[i]].first <= r) {
            if (cover_[reach[applied_[i]].second]++ == 0)
                --uncovered_;
            ++applied_[i];
        }
        return before;
    }

    void lower(std::size_t i, std::size_t before)
    {
        auto& reach = reach_[i];
        while (applied_[i] > before) {
            --applied_[i];
            if (--cover_[reach[applied_[i]].second] == 0)
                ++uncovered_;
        }
    }

    void record_leaf()
    {
        Distance total = cost_;
        std::vector<std::size_t> extras;
        if (exact_ && open_count_ < k_) {
            auto fill = fill_extras(k_ - open_count_);
            if (!fill)
                return;
            total = sat_add(total, fill->first);
            extras = std::move(fill->second);
        }
        if (total >= best_)
            return;
        best_ = total;
        found_ = true;
        incumbent_.pairs.clear();
        for (std::size_t i = 0; i < eligible_.size(); ++i)
            if (open_[i])
                incumbent_.pairs.push_back({eligible_[i], radius_[i]});
        for (const std::size_t x : extras)
            incumbent_.pairs.push_back({eligible_[x], lo_[x]});
    }

    struct Option {
        Distance increment;
        std::size_t center;
        Distance radius;
    };

    void search()
    {
        if ((++nodes_ & 1023) == 0 && deadline_.expired())
            timed_out_ = true;
        if (timed_out_)
            return;
        if (uncovered_ == 0) {
            record_leaf();
            return;
        }
        const Distance slack = best_ - cost_;
        // most constrained uncovered point; the largest cheapest increment
        // over all points bounds the remaining cost from below
        std::size_t branch_point = m_.size();
        std::size_t fewest = SIZE_MAX;
        Distance bound = 0;
        const bool may_open = open_count_ < k_;
        for (Vertex p = 0; p < m_.size(); ++p) {
            if (cover_[p])
                continue;
            std::size_t options = 0;
            Distance cheapest = kInfinity;
            for (std::size_t i = 0; i < eligible_.size(); ++i) {
                const Distance d = m_.at(eligible_[i], p);
                if (d > cap_)
                    continue;
                Distance inc = 0;
                if (open_[i])
                    inc = d - radius_[i];
                else if (may_open)
                    inc = std::max(d, lo_[i]);
                else
                    continue;
                if (inc >= slack)
                    continue;
                ++options;
                cheapest = std::min(cheapest, inc);
            }
            if (options == 0)
                return;
            bound = std::max(bound, cheapest);
            if (options < fewest) {
                fewest = options;
                branch_point = p;
            }
        }
        if (bound >= slack)
            return;

        const Vertex p = static_cast<Vertex>(branch_point);
        std::vector<Option> options;
        for (std::size_t i = 0; i < eligible_.size(); ++i) {
            const Distance d = m_.at(eligible_[i], p);
            if (d > cap_)
                continue;
            if (open_[i])
                options.push_back({d - radius_[i], i, d});
            else if (may_open)
                options.push_back({std::max(d, lo_[i]), i, std::max(d, lo_[i])});
        }
        std::sort(options.begin(), options.end(),
            [](const Option& a, const Option& b) { return std::tie(a.increment, a.center) < std::tie(b.increment, b.center); });
        for (const Option& o : options) {
            if (o.increment >= best_ - cost_)
                break;
            const bool opening = !open_[o.center];
            const Distance old_radius = radius_[o.center];
            if (opening) {
                open_[o.center] = true;
                ++open_count_;
            }
            radius_[o.center] = o.radius;
            cost_ += o.increment;
            const std::size_t before = raise(o.center, o.radius);
            search();
            lower(o.center, before);
            cost_ -= o.increment;
            radius_[o.center] = old_radius;
            if (opening) {
                open_[o.center] = false;
                --open_count_;
            }
            if (timed_out_)
                return;
        }
    }

    const MetricSpace& m_;
    std::vector<Vertex> eligible_;
    std::size_t k_;
    bool exact_;
    Distance cap_;
    const Deadline& deadline_;
    std::vector<Distance> lo_;
    std::vector<std::vector<std::pair<Distance, Vertex>>> reach_;
    std::vector<std::size_t> by_lo_;
    std::vector<bool> open_;
    std::vector<Distance> radius_;
    std::vector<std::size_t> applied_;
    std::vector<std::uint32_t> cover_;
    std::size_t uncovered_ = 0;
    std::size_t open_count_ = 0;
    Distance cost_ = 0;
    Distance best_ = kInfinity;
    bool found_ = false;
    bool timed_out_ = false;
    Clustering incumbent_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Exact branch-and-bound for instances beyond the DP.
inline SolveReport solve_branch_bound(const MsrInstance& inst, const SolveOptions& opts = {})
{
    const detail::Deadline deadline(opts.timeout);
    SolveReport report;
    report.algorithm = Algorithm::branch_bound;
    if (detail::exact_trivially_infeasible(inst)) {
        report.elapsed = deadline.elapsed();
        return report;
    }
    detail::BranchBound bb(inst, detail::radius_cap(inst, opts), deadline);
    bb.run(detail::cost_limit(inst));
    report.nodes_explored = bb.nodes();
    if (bb.timed_out()) {
        report.status = SolveStatus::timeout;
    } else if (bb.found()) {
        report.status = SolveStatus::optimal;
        report.clustering = normalize_clustering(bb.incumbent());
        report.optimal_cost = report.clustering.cost();
        detail::canonicalize_witness(inst, opts, report, deadline);
    }
    report.elapsed = deadline.elapsed();
    return report;
}

/// Tries every centre set of admissible size and solves its radii exactly.
inline SolveReport solve_enumerate(const MsrInstance& inst, const SolveOptions& opts = {})
{
    const detail::Deadline deadline(opts.timeout);
    SolveReport report;
    report.algorithm = Algorithm::enumerate;
    if (detail::exact_trivially_infeasible(inst)) {
        report.elapsed = deadline.elapsed();
        return report;
    }
    auto res = detail::enumerate_center_sets(inst, detail::radius_cap(inst, opts), detail::cost_limit(inst), false, deadline);
    report.nodes_explored = res.nodes;
    if (res.timed_out) {
        report.status = SolveStatus::timeout;
    } else if (res.best) {
        report.status = SolveStatus::optimal;
        report.clustering = *res.best;
        report.optimal_cost = res.cost;
    }
    report.elapsed = deadline.elapsed();
    return report;
}

/// Picks the cheapest applicable algorithm: the DP on small point sets,
/// enumeration when there are few centre sets, branch-and-bound otherwise.
inline SolveReport solve(const MsrInstance& inst, const SolveOptions& opts = {})
{
    const std::size_t n = inst.size();
    const bool exact = inst.kind() == VariantKind::exact_nonzero;
    bool dp_fits = n <= std::min<std::size_t>(opts.dp_max_points, 30);
    if (exact && dp_fits)
        dp_fits = (n + 1) * (inst.k() + 1) <= opts.exact_dp_max_cells >> n;
    if (dp_fits)
        return solve_cover_dp(inst, opts);
    if (detail::count_center_sets(inst.eligible_centers().size(), inst.k(), exact, opts.enumerate_max_center_sets)
        <= opts.enumerate_max_center_sets)
        return solve_enumerate(inst, opts);
    return solve_branch_bound(inst, opts);
}

struct Decision {
    bool yes = false;
    SolveReport report;
};

/// Is there a valid clustering of cost at most the instance's budget?
/// With radius pruning off the unconstrained optimum is computed and
/// compared against the budget.
inline Decision decide(const MsrInstance& inst, const SolveOptions& opts = {})
{
    if (!inst.delta())
        throw Error(ErrorKind::invalid_argument, "decide needs a budget");
    Decision d;
    if (opts.prune_radii) {
        d.report = solve(inst, opts);
    } else {
        d.report = solve(inst.with_delta(std::nullopt), opts);
    }
    if (d.report.status == SolveStatus::timeout)
        throw Error(ErrorKind::timeout, "solver exceeded its time limit");
    d.yes = d.report.optimal() && d.report.optimal_cost <= *inst.delta();
    return d;
}

} // namespace msr
