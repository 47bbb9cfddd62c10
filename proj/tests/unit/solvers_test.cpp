#include "msr/solvers.hpp"
#include "test_graphs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msr;
using namespace msr::testing;

namespace {

// Minimum cost over every assignment "point -> no pair, or a pair with
// integer radius 0..D", D the largest finite distance. Independent of the
// candidate-radius restriction the solvers rely on.
std::optional<Distance> brute_force(const MsrInstance& inst)
{
    const auto& m = inst.metric();
    const std::size_t n = inst.size();
    Distance span = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (m.at(u, v) != kInfinity)
                span = std::max(span, m.at(u, v));
    const std::size_t choices = span + 2; // 0 = unused, r + 1 = radius r
    std::optional<Distance> best;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        Clustering c;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                c.pairs.push_back({v, pick[v] - 1});
        if (verify_clustering(inst, c).valid() && (!best || c.cost() < *best))
            best = c.cost();
        std::size_t i = 0;
        while (i < n && ++pick[i] == choices)
            pick[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

MsrInstance make(const WeightedGraph& g, std::size_t k, Variant v = Variant::standard(),
    std::optional<Distance> delta = std::nullopt)
{
    return MsrInstance::make(g, k, delta, std::move(v));
}

Clustering pairs(std::initializer_list<ClusterPair> list) { return Clustering{list}; }

} // namespace

TEST(Verify, PathExamples)
{
    const auto inst = make(unit_path(3), 1);
    EXPECT_TRUE(verify_clustering(inst, pairs({{1, 1}})).valid());
    const auto bad = verify_clustering(inst, pairs({{0, 1}}));
    EXPECT_EQ(bad.reason, VerdictReason::uncovered_point);
    EXPECT_EQ(bad.detail, "point 2");
}

TEST(Verify, SingletonBallInExactVariant)
{
    const auto inst = make(unit_path(3), 2, Variant::exact_nonzero());
    const auto v = verify_clustering(inst, pairs({{0, 0}, {1, 1}}));
    EXPECT_EQ(v.reason, VerdictReason::singleton_ball);
    EXPECT_NE(v.detail.find("covers fewer than two points"), std::string::npos);
    EXPECT_TRUE(verify_clustering(inst, pairs({{0, 1}, {1, 1}})).valid());
}

TEST(Verify, ReasonCodes)
{
    const auto inst = make(unit_path(4), 2, Variant::standard(), 2);
    EXPECT_EQ(verify_clustering(inst, {}).reason, VerdictReason::empty);
    EXPECT_EQ(verify_clustering(inst, pairs({{9, 1}})).reason, VerdictReason::center_out_of_range);
    EXPECT_EQ(verify_clustering(inst, pairs({{1, 1}, {1, 2}})).reason, VerdictReason::duplicate_center);
    EXPECT_EQ(verify_clustering(inst, pairs({{0, 0}, {1, 0}, {2, 0}})).reason, VerdictReason::too_many_pairs);
    EXPECT_EQ(verify_clustering(inst, pairs({{1, 3}})).reason, VerdictReason::over_budget);
    EXPECT_TRUE(verify_clustering(inst, pairs({{1, 1}, {3, 0}})).valid());

    const auto exact = make(unit_path(4), 2, Variant::exact_nonzero());
    EXPECT_EQ(verify_clustering(exact, pairs({{1, 3}})).reason, VerdictReason::wrong_pair_count);
    const auto allowed = make(unit_path(3), 1, Variant::allowed_centers({0}));
    EXPECT_EQ(verify_clustering(allowed, pairs({{1, 1}})).reason, VerdictReason::center_not_allowed);
}

TEST(Normalize, MergingDuplicatesNeverHurts)
{
    std::mt19937_64 rng(11);
    const auto m = shortest_path_metric(unit_cycle(7));
    for (int trial = 0; trial < 300; ++trial) {
        Clustering c;
        const std::size_t count = 1 + rng() % 5;
        for (std::size_t i = 0; i < count; ++i)
            c.pairs.push_back({static_cast<Vertex>(rng() % 3), rng() % 4});
        const auto merged = normalize_clustering(c);
        EXPECT_LE(merged.cost(), c.cost());
        EXPECT_EQ(covers_all(m, merged), covers_all(m, c));
        for (std::size_t i = 1; i < merged.pairs.size(); ++i)
            EXPECT_LT(merged.pairs[i - 1].center, merged.pairs[i].center);
    }
}

TEST(CoverDp, Examples)
{
    const auto path = solve_cover_dp(make(unit_path(3), 1));
    ASSERT_TRUE(path.optimal());
    EXPECT_EQ(path.optimal_cost, 1u);
    EXPECT_EQ(path.clustering, pairs({{1, 1}}));

    const auto c4 = make(unit_cycle(4), 2);
    EXPECT_EQ(brute_force(c4), Distance{1});
    EXPECT_EQ(solve_cover_dp(c4).optimal_cost, 1u);

    const auto c4_exact = make(unit_cycle(4), 2, Variant::exact_nonzero());
    EXPECT_EQ(brute_force(c4_exact), Distance{2});
    const auto r = solve_cover_dp(c4_exact);
    EXPECT_EQ(r.optimal_cost, 2u);
    EXPECT_TRUE(verify_clustering(c4_exact, r.clustering).valid());
}

TEST(CoverDp, SizeCapAndExactInfeasible)
{
    try {
        solve_cover_dp(make(unit_path(23), 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_cap);
    }
    const auto r = solve_cover_dp(make(unit_path(3), 4, Variant::exact_nonzero()));
    EXPECT_EQ(r.status, SolveStatus::infeasible);
}

TEST(BranchBound, Examples)
{
    EXPECT_EQ(solve_branch_bound(make(star(4), 2)).optimal_cost, 1u);
    const auto big = make(unit_path(40), 2);
    const auto r = solve_branch_bound(big);
    ASSERT_TRUE(r.optimal());
    // a radius-r ball holds at most 2r + 1 path points, so covering 40
    // points with two balls needs r1 + r2 >= 19
    EXPECT_EQ(r.optimal_cost, 19u);
    EXPECT_TRUE(verify_clustering(big, r.clustering).valid());
}

TEST(BranchBound, TimeoutIsDistinct)
{
    SolveOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    opts.canonicalize = false;
    std::vector<Edge> edges;
    std::mt19937_64 rng(3);
    const std::size_t n = 400;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng() % v), v, 1 + rng() % 50});
    const auto r = solve_branch_bound(make(build_graph(n, edges), 8), opts);
    EXPECT_EQ(r.status, SolveStatus::timeout);
}

TEST(Enumerate, Examples)
{
    EXPECT_EQ(solve_enumerate(make(unit_path(3), 1)).optimal_cost, 1u);
    const auto forced = solve_enumerate(make(unit_path(3), 1, Variant::allowed_centers({0})));
    EXPECT_EQ(forced.optimal_cost, 2u);
    EXPECT_EQ(forced.clustering, pairs({{0, 2}}));
}

TEST(OptimalRadii, Examples)
{
    const auto m = shortest_path_metric(unit_path(4));
    const std::vector<Vertex> mid{1, 2};
    const auto a = optimal_radii_for_centers(m, mid);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->cost, 2u);
    // (1,1) and (0,2) both cost 2; ties go to the smaller radius list
    EXPECT_EQ(a->radii, (std::vector<Distance>{0, 2}));
    const auto inst = make(unit_path(4), 2);
    EXPECT_TRUE(verify_clustering(inst, pairs({{1, 1}, {2, 1}})).valid());

    const std::vector<Vertex> end{0};
    EXPECT_EQ(optimal_radii_for_centers(m, end)->radii, (std::vector<Distance>{3}));

    const std::vector<Vertex> all{0, 1, 2, 3};
    EXPECT_EQ(optimal_radii_for_centers(m, all)->cost, 0u);
    EXPECT_FALSE(optimal_radii_for_centers(m, end, Distance{2}));
    // nonzero balls on every centre
    EXPECT_EQ(optimal_radii_for_centers(m, all, std::nullopt, true)->cost, 4u);
}

TEST(Decide, PathBudgets)
{
    EXPECT_TRUE(decide(make(unit_path(3), 1, Variant::standard(), 1)).yes);
    EXPECT_FALSE(decide(make(unit_path(3), 1, Variant::standard(), 0)).yes);
    SolveOptions unpruned;
    unpruned.prune_radii = false;
    EXPECT_FALSE(decide(make(unit_path(3), 1, Variant::standard(), 0), unpruned).yes);
}

TEST(Solvers, AgreeWithBruteForce)
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.push_back({static_cast<Vertex>(rng() % v), v, 1 + rng() % 2});
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 2; v < n; ++v)
                if (rng() % 4 == 0 && !std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
                        return std::min(e.u, e.v) == u && std::max(e.u, e.v) == v;
                    }))
                    edges.push_back({u, v, 1 + rng() % 2});
        const auto g = build_graph(n, edges);
        const std::size_t k = 1 + rng() % 3;
        Variant variant;
        switch (rng() % 3) {
        case 0: variant = Variant::standard(); break;
        case 1: variant = Variant::exact_nonzero(); break;
        default: {
            std::vector<Vertex> allowed{static_cast<Vertex>(rng() % n)};
            if (rng() % 2)
                allowed.push_back(static_cast<Vertex>(rng() % n));
            variant = Variant::allowed_centers(allowed);
        }
        }
        const auto inst = make(g, k, variant);
        const auto expected = brute_force(inst);
        for (const auto& r : {solve_cover_dp(inst), solve_branch_bound(inst), solve_enumerate(inst)}) {
            if (!expected) {
                EXPECT_EQ(r.status, SolveStatus::infeasible) << "trial " << trial;
                continue;
            }
            ASSERT_TRUE(r.optimal()) << "trial " << trial << " " << to_string(r.algorithm);
            EXPECT_EQ(r.optimal_cost, *expected) << "trial " << trial << " " << to_string(r.algorithm);
            EXPECT_TRUE(verify_clustering(inst, r.clustering).valid()) << "trial " << trial;
            EXPECT_EQ(r.clustering.cost(), r.optimal_cost);
        }
        ++checked;
    }
    EXPECT_EQ(checked, 150);
}

TEST(Solvers, WitnessesAreCanonical)
{
    // every solver returns the same witness once canonicalised
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng() % 5;
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.push_back({static_cast<Vertex>(rng() % v), v, 1 + rng() % 3});
        const auto inst = make(build_graph(n, edges), 1 + rng() % 3, rng() % 2 ? Variant::standard() : Variant::exact_nonzero());
        const auto a = solve_cover_dp(inst);
        const auto b = solve_branch_bound(inst);
        const auto c = solve_enumerate(inst);
        EXPECT_EQ(a.clustering, b.clustering) << "trial " << trial;
        EXPECT_EQ(a.clustering, c.clustering) << "trial " << trial;
    }
}

TEST(Solvers, MonotoneInKAndExactDominates)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng() % 6;
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.push_back({static_cast<Vertex>(rng() % v), v, 1 + rng() % 5});
        const auto g = build_graph(n, edges);
        Distance previous = kInfinity;
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto standard = solve(make(g, k));
            EXPECT_LE(standard.optimal_cost, previous);
            previous = standard.optimal_cost;
            const auto exact = solve(make(g, k, Variant::exact_nonzero()));
            if (exact.optimal()) {
                EXPECT_GE(exact.optimal_cost, standard.optimal_cost);
            }
        }
    }
}
