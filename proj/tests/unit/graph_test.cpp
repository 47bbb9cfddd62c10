#include "msr/graph.hpp"
#include "test_graphs.hpp"

#include <gtest/gtest.h>

using namespace msr;
using namespace msr::testing;

namespace {

ErrorKind kind_of(std::size_t n, std::vector<Edge> edges)
{
    try {
        build_graph(n, std::move(edges));
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::parse;
}

} // namespace

TEST(BuildGraph, UnitPath)
{
    const auto g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_TRUE(g.unit());
    EXPECT_EQ(g.total_weight(), 2u);
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraph, WeightedPath)
{
    const auto g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
    EXPECT_FALSE(g.unit());
    EXPECT_EQ(g.total_weight(), 5u);
}

TEST(BuildGraph, RejectsMalformedInput)
{
    EXPECT_EQ(kind_of(2, {{0, 0, 1}}), ErrorKind::self_loop);
    EXPECT_EQ(kind_of(2, {{0, 1, 1}, {1, 0, 2}}), ErrorKind::duplicate_edge);
    EXPECT_EQ(kind_of(2, {{0, 1, 0}}), ErrorKind::zero_weight);
    EXPECT_EQ(kind_of(2, {{0, 2, 1}}), ErrorKind::vertex_out_of_range);
    EXPECT_EQ(kind_of(3, {{0, 1, kMaxTotalWeight}, {1, 2, 1}}), ErrorKind::weight_overflow);
}

TEST(Metric, PathAndWeightedPath)
{
    EXPECT_EQ(shortest_path_metric(unit_path(3)).at(0, 2), 2u);
    EXPECT_EQ(shortest_path_metric(build_graph(3, {{0, 1, 2}, {1, 2, 3}})).at(0, 2), 5u);
}

TEST(Metric, DetourBeatsHeavyEdge)
{
    const auto m = shortest_path_metric(build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}}));
    EXPECT_EQ(m.at(0, 2), 2u);
    EXPECT_EQ(m.at(2, 0), 2u);
}

TEST(Metric, AxiomsOnWeightedGraph)
{
    const auto g = build_graph(6, {{0, 1, 4}, {1, 2, 1}, {2, 3, 7}, {3, 4, 2}, {4, 5, 3}, {5, 0, 1}, {1, 4, 2}});
    const auto m = shortest_path_metric(g);
    for (Vertex u = 0; u < 6; ++u) {
        EXPECT_EQ(m.at(u, u), 0u);
        for (Vertex v = 0; v < 6; ++v) {
            EXPECT_EQ(m.at(u, v), m.at(v, u));
            for (Vertex w = 0; w < 6; ++w)
                EXPECT_LE(m.at(u, w), m.at(u, v) + m.at(v, w));
        }
    }
    // BFS and Dijkstra agree on unit graphs
    const auto c = unit_cycle(7);
    std::vector<Distance> bfs(7), dij(7);
    detail::bfs_row(c, 0, bfs);
    detail::dijkstra_row(c, 0, dij);
    EXPECT_EQ(bfs, dij);
}

TEST(Metric, DisconnectedPolicy)
{
    const auto g = build_graph(3, {{0, 1, 1}});
    try {
        shortest_path_metric(g);
        FAIL() << "disconnected graph accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::disconnected);
    }
    const auto m = shortest_path_metric(g, Connectivity::allow_disconnected);
    EXPECT_EQ(m.at(0, 2), kInfinity);
    EXPECT_FALSE(m.finite());
}

TEST(Ball, Examples)
{
    EXPECT_EQ(ball(shortest_path_metric(star(3)), 0, 1), (std::vector<Vertex>{0, 1, 2, 3}));
    const auto m = shortest_path_metric(unit_path(3));
    EXPECT_EQ(ball(m, 2, 0), (std::vector<Vertex>{2}));
    EXPECT_EQ(ball(m, 0, 1), (std::vector<Vertex>{0, 1}));
}

TEST(CandidateRadii, Examples)
{
    const auto m = shortest_path_metric(unit_path(3));
    EXPECT_EQ(candidate_radii(m, 1), (std::vector<Distance>{0, 1}));
    EXPECT_EQ(candidate_radii(m, 0), (std::vector<Distance>{0, 1, 2}));
    EXPECT_EQ(candidate_radii(m, 0, 1), (std::vector<Distance>{0, 1}));
}

TEST(Subdivide, SingleHeavyEdge)
{
    const auto s = subdivide_to_unit_traced(build_graph(2, {{0, 1, 3}}));
    EXPECT_EQ(s.graph.order(), 4u);
    EXPECT_TRUE(s.graph.unit());
    EXPECT_EQ(s.origin.size(), 2u);
    EXPECT_EQ(shortest_path_metric(s.graph).at(0, 1), 3u);
}

TEST(Subdivide, UnitGraphUnchanged)
{
    const auto g = unit_cycle(5);
    const auto s = subdivide_to_unit(g);
    EXPECT_EQ(s.order(), 5u);
    EXPECT_EQ(s.edges().size(), 5u);
    EXPECT_EQ(shortest_path_metric(s), shortest_path_metric(g));
}

TEST(Subdivide, TriangleBecomesHexagon)
{
    const auto s = subdivide_to_unit(build_graph(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}}));
    EXPECT_EQ(s.order(), 6u);
    EXPECT_EQ(s.edges().size(), 6u);
    for (Vertex v = 0; v < 6; ++v)
        EXPECT_EQ(s.degree(v), 2u);
    EXPECT_TRUE(is_connected(s));
    const auto m = shortest_path_metric(s);
    EXPECT_EQ(m.at(0, 1), 2u);
    EXPECT_EQ(m.at(0, 2), 2u);
}

TEST(Subdivide, RespectsCap)
{
    try {
        subdivide_to_unit(build_graph(2, {{0, 1, 100}}), 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_cap);
    }
}

TEST(Bipartite, CycleAndTriangle)
{
    const auto sides = is_bipartite(unit_cycle(4));
    ASSERT_TRUE(sides);
    EXPECT_EQ(*sides, (std::vector<std::uint8_t>{0, 1, 0, 1}));
    EXPECT_FALSE(is_bipartite(complete(3)));
}
