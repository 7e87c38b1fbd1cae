#include "testkit.hpp"

#include "topoface/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>

using namespace topoface;

namespace {

// Vertex 3 sits inside triangle {0, 1, 2}.
TopoDrawing k4_with_inner_vertex() {
    return gen_straightline({Point(0L, 0L), Point(10L, 0L), Point(0L, 10L), Point(3L, 3L)});
}

void expect_euler(const Arrangement& arr) {
    EXPECT_EQ(arr.node_count() - arr.arc_count() + arr.cell_count(), 2);
}

Z2EdgeChain random_closed_walk(const TopoDrawing& d, std::mt19937_64& rng, std::vector<VertexId>& walk) {
    const int len = 3 + static_cast<int>(rng() % 4);
    walk.clear();
    while (static_cast<int>(walk.size()) < len) {
        const auto v = static_cast<VertexId>(rng() % d.n());
        if (!walk.empty() && walk.back() == v) continue;
        if (static_cast<int>(walk.size()) == len - 1 && walk.front() == v) continue;
        walk.push_back(v);
    }
    Z2EdgeChain z;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const EdgeId e = d.edge_id(walk[i], walk[(i + 1) % walk.size()]);
        const auto at = std::find(z.begin(), z.end(), e);
        if (at == z.end()) {
            z.push_back(e);
        } else {
            z.erase(at);
        }
    }
    std::sort(z.begin(), z.end());
    return z;
}

} // namespace

TEST(Planarize, InnerVertexK4HasNoCrossings) {
    const Arrangement arr(k4_with_inner_vertex());
    EXPECT_EQ(arr.node_count(), 4);
    EXPECT_EQ(arr.arc_count(), 6);
    EXPECT_EQ(arr.cell_count(), 4);
}

TEST(Planarize, ConvexK4SplitsTheDiagonals) {
    const Arrangement arr(testkit::convex_drawing(4));
    EXPECT_EQ(arr.node_count(), 5);
    EXPECT_EQ(arr.arc_count(), 8);
    EXPECT_EQ(arr.cell_count(), 5);
}

TEST(Planarize, TwistedFiveHasTenNodes) {
    const Arrangement arr(gen_twisted(5));
    EXPECT_EQ(arr.node_count(), 10);
    expect_euler(arr);
}

TEST(Planarize, EulerAndArcInvariants) {
    std::vector<TopoDrawing> drawings{gen_twisted(7), gen_twisted_square(6, ratio(1, 10)).drawing,
                                      gen_z2_rect({4, 6, 3, Scalar(0), {}}).drawing};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) drawings.push_back(gen_random_straightline(9, seed));
    for (const auto& d : drawings) {
        const Arrangement arr(d);
        expect_euler(arr);
        for (ArcId a = 0; a < arr.arc_count(); ++a) EXPECT_NE(arr.cell_of(2 * a), arr.cell_of(2 * a + 1));
        for (CellId c = 0; c < arr.cell_count(); ++c) {
            if (c != arr.outer_cell()) {
                EXPECT_GT(sign(arr.cell_area(c)), 0);
            }
        }
        // The arcs of an edge concatenate to its polyline, plus crossing points.
        for (EdgeId e = 0; e < d.edge_count(); ++e) {
            Polyline joined;
            for (ArcId a = arr.edge_arc_begin(e); a < arr.edge_arc_end(e); ++a) {
                const Polyline piece = arr.arc_polyline(a);
                joined.insert(joined.end(), piece.begin() + (joined.empty() ? 0 : 1), piece.end());
            }
            Polyline bends;
            for (const auto& p : joined) {
                if (std::find(d.edge(e).begin(), d.edge(e).end(), p) != d.edge(e).end()) bends.push_back(p);
            }
            EXPECT_EQ(bends, d.edge(e));
            EXPECT_EQ(static_cast<int>(joined.size() - d.edge(e).size()), arr.edge_arc_end(e) - arr.edge_arc_begin(e) - 1);
        }
    }
}

TEST(Planarize, CellAreasSumToTheHull) {
    for (int n : {4, 5, 7}) {
        const TopoDrawing d = testkit::convex_drawing(n);
        const Arrangement arr(d);
        Scalar total(0);
        for (CellId c = 0; c < arr.cell_count(); ++c) {
            if (c != arr.outer_cell()) total += arr.cell_area(c);
        }
        EXPECT_EQ(total, abs(signed_area(d.vertices()))) << n;
    }
}

TEST(Planarize, CrossingCountMatchesPairwiseCrossings) {
    const TopoDrawing d = gen_random_straightline(10, 8);
    const Arrangement arr(d);
    long pairs = 0;
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        for (EdgeId f = e + 1; f < d.edge_count(); ++f) {
            const auto [a, b] = d.endpoints(e);
            const auto [c, g] = d.endpoints(f);
            if (a == c || a == g || b == c || b == g) continue;
            pairs += polyline_crossings(d.edge(e), d.edge(f)).size();
        }
    }
    EXPECT_EQ(arr.crossing_count(), pairs);
}

TEST(PlaneSubgraphFaces, StarIsOneFaceThroughV0) {
    const Arrangement arr(testkit::convex_drawing(4));
    const TopoDrawing& d = arr.drawing();
    const PlaneSubgraph star(arr, {d.edge_id(0, 1), d.edge_id(0, 2), d.edge_id(0, 3)});
    ASSERT_EQ(star.faces().size(), 1u);
    EXPECT_EQ(star.face(0).size, 6);
    const auto& walk = star.face(0).walks.front();
    EXPECT_TRUE(std::any_of(walk.begin(), walk.end(), [](const WalkStep& s) { return s.vertex == 0; }));
}

TEST(PlaneSubgraphFaces, StarPlusHullPathHasThreeFaces) {
    const Arrangement arr(testkit::convex_drawing(4));
    const TopoDrawing& d = arr.drawing();
    const PlaneSubgraph h(arr, {d.edge_id(0, 1), d.edge_id(0, 2), d.edge_id(0, 3), d.edge_id(1, 2), d.edge_id(2, 3)});
    ASSERT_EQ(h.faces().size(), 3u);
    int total = 0;
    for (const auto& f : h.faces()) {
        total += f.size;
        const auto& walk = f.walks.front();
        EXPECT_TRUE(std::any_of(walk.begin(), walk.end(), [](const WalkStep& s) { return s.vertex == 0; }));
    }
    EXPECT_EQ(total, 2 * 5);
}

TEST(PlaneSubgraphFaces, TriangleHasInnerFaceOfSizeThree) {
    const Arrangement arr(k4_with_inner_vertex());
    const TopoDrawing& d = arr.drawing();
    const PlaneSubgraph h(arr, {d.edge_id(0, 1), d.edge_id(1, 2), d.edge_id(0, 2)});
    ASSERT_EQ(h.faces().size(), 2u);
    const int inner = h.face_of_isolated(3);
    EXPECT_NE(inner, h.outer_face());
    EXPECT_EQ(h.face(inner).size, 3);
    EXPECT_EQ(h.face(inner).interior, std::vector<VertexId>{3});
    EXPECT_EQ(h.face(inner).cells.size(), 3u);
}

TEST(PlaneSubgraphFaces, FiveCycleBoundsASimpleWalk) {
    const Arrangement arr(testkit::convex_drawing(5));
    const TopoDrawing& d = arr.drawing();
    std::vector<EdgeId> ring;
    for (int i = 0; i < 5; ++i) ring.push_back(d.edge_id(i, (i + 1) % 5));
    const PlaneSubgraph h(arr, ring);
    ASSERT_EQ(h.faces().size(), 2u);
    const auto& inner = h.face(1 - h.outer_face());
    ASSERT_EQ(inner.walks.size(), 1u);
    EXPECT_EQ(inner.size, 5);
    std::set<VertexId> seen;
    for (const auto& s : inner.walks.front()) seen.insert(s.vertex);
    EXPECT_EQ(seen.size(), 5u);
}

TEST(PlaneSubgraphFaces, CrossingEdgesAreRejected) {
    const Arrangement arr(testkit::convex_drawing(4));
    const TopoDrawing& d = arr.drawing();
    EXPECT_THROW(PlaneSubgraph(arr, {d.edge_id(0, 2), d.edge_id(1, 3)}), NotPlaneError);
}

TEST(PlaneSubgraphFaces, BridgesCountTwice) {
    const Arrangement arr(gen_random_straightline(8, 2));
    for (int f_size : {1, 3}) {
        std::vector<EdgeId> path;
        for (int i = 0; i < f_size; ++i) path.push_back(arr.drawing().edge_id(0, i + 1));
        const PlaneSubgraph h(arr, path);
        int total = 0;
        for (const auto& f : h.faces()) total += f.size;
        EXPECT_EQ(total, 2 * f_size);
    }
}

TEST(BoundaryDistance, HexagonDistances) {
    const Arrangement arr(testkit::convex_drawing(6));
    const TopoDrawing& d = arr.drawing();
    std::vector<EdgeId> ring;
    for (int i = 0; i < 6; ++i) ring.push_back(d.edge_id(i, (i + 1) % 6));
    const PlaneSubgraph h(arr, ring);
    const auto& inner = h.face(1 - h.outer_face());
    EXPECT_EQ(boundary_distance(inner, 2, 3), 1);
    EXPECT_EQ(boundary_distance(inner, 4, 4), 0);
    EXPECT_EQ(boundary_distance(inner, 0, 3), 3);
    EXPECT_EQ(boundary_distance(inner, 1, 5), 2);
}

TEST(BoundaryDistance, OffBoundaryVertexThrows) {
    const Arrangement arr(k4_with_inner_vertex());
    const TopoDrawing& d = arr.drawing();
    const PlaneSubgraph h(arr, {d.edge_id(0, 1), d.edge_id(1, 2), d.edge_id(0, 2)});
    EXPECT_THROW(boundary_distance(h.face(h.face_of_isolated(3)), 0, 3), NotOnBoundaryError);
}

TEST(CellsInsideCycle, TriangleAwayFromTheInnerVertex) {
    const Arrangement arr(k4_with_inner_vertex());
    const std::vector<VertexId> tri{0, 1, 3};
    const CellSet cells = cells_inside_cycle(arr, tri, CycleMode::jordan);
    const Point centroid(ratio(13, 3), 1L);
    EXPECT_EQ(cells, CellSet{arr.locate(centroid)});
}

TEST(CellsInsideCycle, CrossingCycleIsNotJordan) {
    const Arrangement arr(testkit::convex_drawing(4));
    const std::vector<VertexId> bow{0, 2, 1, 3};
    EXPECT_THROW(cells_inside_cycle(arr, bow, CycleMode::jordan), NotJordanError);
    EXPECT_FALSE(is_jordan_cycle(arr, bow));
    EXPECT_NO_THROW(cells_inside_cycle(arr, bow, CycleMode::z2));
}

TEST(CellsInsideCycle, MatchesRayCastingPerCell) {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Arrangement arr(gen_random_straightline(7, seed));
        const TopoDrawing& d = arr.drawing();
        for (int t = 0; t < 5; ++t) {
            std::vector<VertexId> walk;
            random_closed_walk(d, rng, walk);
            const CellSet inside = cells_inside_cycle(arr, walk);
            EXPECT_FALSE(std::binary_search(inside.begin(), inside.end(), arr.outer_cell()));
            const auto curves = cycle_curves(d, walk);
            for (CellId c = 0; c < arr.cell_count(); ++c) {
                const bool direct = ray_parity_auto(arr.cell_point(c), curves);
                EXPECT_EQ(direct, std::binary_search(inside.begin(), inside.end(), c)) << "cell " << c;
            }
        }
    }
}

TEST(CellsInsideCycle, LinearOverZ2) {
    std::mt19937_64 rng(9);
    const Arrangement arr(gen_random_straightline(7, 6));
    const TopoDrawing& d = arr.drawing();
    for (int t = 0; t < 10; ++t) {
        std::vector<VertexId> walk;
        const auto a = random_closed_walk(d, rng, walk);
        const auto b = random_closed_walk(d, rng, walk);
        const auto ca = cells_inside_edges(arr, a);
        const auto cb = cells_inside_edges(arr, b);
        CellSet expected;
        std::set_symmetric_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(expected));
        EXPECT_EQ(cells_inside_edges(arr, chain_sum(a, b)), expected);
    }
}

TEST(CellsInsideCycle, JordanInsideIsConnectedAndMatchesShoelace) {
    const Arrangement arr(gen_random_straightline(7, 12));
    const TopoDrawing& d = arr.drawing();
    for (int k : {3, 4, 5}) {
        for (const auto& cycle : jordan_cycles(arr, k)) {
            const CellSet cells = cells_inside_cycle(arr, cycle, CycleMode::jordan);
            ASSERT_FALSE(cells.empty());
            Scalar total(0);
            for (CellId c : cells) total += arr.cell_area(c);
            EXPECT_EQ(total, abs(signed_area(cycle_ring(d, cycle))));

            std::set<EdgeId> on_cycle;
            for (std::size_t i = 0; i < cycle.size(); ++i) on_cycle.insert(d.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]));
            std::set<CellId> reached{cells.front()};
            std::queue<CellId> todo;
            todo.push(cells.front());
            while (!todo.empty()) {
                const CellId c = todo.front();
                todo.pop();
                for (HalfEdgeId h : arr.cell_boundary(c)) {
                    if (on_cycle.count(arr.arc_edge(h >> 1))) continue;
                    const CellId next = arr.cell_of(h ^ 1);
                    if (reached.insert(next).second) todo.push(next);
                }
            }
            EXPECT_EQ(reached, std::set<CellId>(cells.begin(), cells.end()));
        }
    }
}

TEST(Locate, FarPointCentroidAndAgreement) {
    const Arrangement arr(k4_with_inner_vertex());
    EXPECT_EQ(arr.locate(Point(1000L, -1000L)), arr.outer_cell());
    EXPECT_NE(arr.locate(Point(ratio(13, 3), 1L)), arr.outer_cell());
    EXPECT_THROW(arr.locate(Point(3L, 3L)), OnBoundaryError);
    EXPECT_THROW(arr.locate(Point(5L, 0L)), OnBoundaryError);

    const Arrangement big(gen_random_straightline(7, 21));
    const std::vector<VertexId> cycle{0, 1, 2};
    const CellSet inside = cells_inside_cycle(big, cycle);
    const auto curves = cycle_curves(big.drawing(), cycle);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Point p = testkit::random_point(rng, Scalar(0), Scalar(1));
        const CellId c = big.locate(p);
        EXPECT_EQ(std::binary_search(inside.begin(), inside.end(), c), ray_parity_auto(p, curves));
    }
}

TEST(VerticesInside, EmptyAndOccupiedTriangles) {
    const TopoDrawing d = k4_with_inner_vertex();
    EXPECT_TRUE(vertices_inside(d, std::vector<VertexId>{0, 1, 3}).empty());
    EXPECT_EQ(vertices_inside(d, std::vector<VertexId>{0, 1, 2}), std::vector<VertexId>{3});
}

TEST(VerticesInside, MatchesPerVertexRayCasting) {
    const TopoDrawing d = gen_random_straightline(9, 31);
    for (const auto& cycle : {std::vector<VertexId>{0, 1, 2}, std::vector<VertexId>{3, 5, 7, 8}, std::vector<VertexId>{1, 4, 6}}) {
        std::vector<VertexId> expected;
        const auto curves = cycle_curves(d, cycle);
        for (VertexId v = 0; v < d.n(); ++v) {
            if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
            if (ray_parity_auto(d.vertex(v), curves)) expected.push_back(v);
        }
        EXPECT_EQ(vertices_inside(d, cycle), expected);
    }
}

TEST(JordanCycles, ConvexK4HasOnlyTheHull) {
    const Arrangement arr(testkit::convex_drawing(4));
    EXPECT_EQ(jordan_cycles(arr, 4), (std::vector<std::vector<VertexId>>{{0, 1, 2, 3}}));
    EXPECT_EQ(jordan_cycles(arr, 3).size(), 4u);
}

TEST(JordanCycles, InnerVertexGivesThreeQuadrilaterals) {
    const Arrangement arr(k4_with_inner_vertex());
    EXPECT_EQ(jordan_cycles(arr, 4).size(), 3u);
}
