#include "testkit.hpp"

#include "topoface/errors.hpp"

#include <gtest/gtest.h>

using namespace topoface;

namespace {

bool nested(std::pair<VertexId, VertexId> a, std::pair<VertexId, VertexId> b) {
    if (a.first > b.first) std::swap(a, b);
    return a.first < b.first && b.second < a.second;
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST(Twisted, CrossingsAreExactlyTheNestedPairs) {
    for (int n = 1; n <= 9; ++n) {
        const TopoDrawing d = gen_twisted(n);
        const Arrangement arr(d);
        EXPECT_EQ(arr.crossing_count(), binomial(n, 4)) << n;
        for (EdgeId e = 0; e < d.edge_count(); ++e) {
            for (EdgeId f = e + 1; f < d.edge_count(); ++f) {
                const int expected = nested(d.endpoints(e), d.endpoints(f)) ? 1 : 0;
                EXPECT_EQ(arr.crossings_between(e, f), expected) << n << ": " << e << " " << f;
            }
        }
    }
}

TEST(Twisted, SmallCases) {
    EXPECT_EQ(Arrangement(gen_twisted(3)).crossing_count(), 0);
    EXPECT_EQ(Arrangement(gen_twisted(5)).crossing_count(), 5);
    EXPECT_THROW(gen_twisted(0), PreconditionError);
}

TEST(Twisted, ProbeLiesInEveryTriangle) {
    for (int n = 3; n <= 7; ++n) {
        const TopoDrawing d = gen_twisted(n);
        const Point probe = twisted_probe(n);
        for (const auto& cycle : jordan_cycles(Arrangement(d), 3)) {
            EXPECT_TRUE(ray_parity_auto(probe, cycle_curves(d, cycle))) << n;
        }
    }
}

TEST(Twisted, Deterministic) { EXPECT_EQ(gen_twisted(8), gen_twisted(8)); }

TEST(TwistedSquare, OddFacesKeepTheirArea) {
    const auto ts = gen_twisted_square(5, ratio(1, 10));
    const Arrangement arr(ts.drawing);
    for (int k : {3, 5}) {
        for (const auto& cycle : jordan_cycles(arr, k)) {
            EXPECT_GE(abs(signed_area(cycle_ring(ts.drawing, cycle))), ratio(9, 10));
            EXPECT_TRUE(ray_parity_auto(ts.probe, cycle_curves(ts.drawing, cycle)));
        }
    }
}

TEST(TwistedSquare, StaysInTheUnitSquareAndMatchesTwisted) {
    for (int n = 3; n <= 7; ++n) {
        const auto ts = gen_twisted_square(n, ratio(1, 10));
        for (const auto& line : ts.drawing.edges()) {
            for (const auto& p : line) {
                EXPECT_TRUE(p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1);
            }
        }
        EXPECT_TRUE(weak_isomorphic(ts.drawing, gen_twisted(n))) << n;
        EXPECT_TRUE(validate(ts.drawing, ValidationMode::simple).valid());
    }
}

TEST(TwistedSquare, RejectsEpsOutsideTheUnitInterval) {
    EXPECT_THROW(gen_twisted_square(5, Scalar(0)), PreconditionError);
    EXPECT_THROW(gen_twisted_square(5, Scalar(1)), PreconditionError);
}

TEST(Straightline, CrossingCounts) {
    EXPECT_EQ(Arrangement(gen_straightline({Point(0L, 0L), Point(1L, 0L), Point(1L, 1L), Point(0L, 1L)})).crossing_count(), 1);
    EXPECT_EQ(Arrangement(gen_straightline({Point(0L, 0L), Point(1L, 0L), Point(0L, 1L)})).crossing_count(), 0);
    const TopoDrawing d = gen_random_straightline(10, 77);
    EXPECT_TRUE(validate(d, ValidationMode::simple).valid());
}

TEST(Straightline, RejectsDegeneratePoints) {
    EXPECT_THROW(gen_straightline({Point(0L, 0L), Point(1L, 1L), Point(2L, 2L), Point(3L, 0L)}), GeneralPositionError);
    // The three long diagonals of this hexagon meet at the origin.
    EXPECT_THROW(gen_straightline({Point(2L, 0L), Point(1L, 2L), Point(-1L, 2L), Point(-2L, 0L), Point(-1L, -2L),
                                   Point(1L, -2L)}),
                 GeneralPositionError);
}

TEST(Straightline, RandomPointsAreSeededAndInTheUnitSquare) {
    EXPECT_EQ(random_points(12, 5), random_points(12, 5));
    EXPECT_NE(random_points(12, 5), random_points(12, 6));
    for (const auto& p : random_points(30, 9)) EXPECT_TRUE(p.x >= 0 && p.x < 1 && p.y >= 0 && p.y < 1);
}

TEST(Z2Rect, SingleEdgeHasNoCrossings) {
    const auto r = gen_z2_rect({2, 1, 1, Scalar(0), {}});
    EXPECT_EQ(r.drawing.edge_count(), 1);
    EXPECT_EQ(Arrangement(r.drawing).crossing_count(), 0);
}

TEST(Z2Rect, ValidGenericForAnyBits) {
    for (int n : {3, 4, 5}) {
        for (int m : {1, 4, 12}) {
            const auto r = gen_z2_rect({n, m, static_cast<std::uint64_t>(n * m), Scalar(0), {}});
            EXPECT_TRUE(validate(r.drawing, ValidationMode::generic).valid()) << n << " " << m;
        }
    }
    Z2RectSpec zeros{5, 12, 0, Scalar(0), std::vector<std::vector<char>>(10, std::vector<char>(12, 0))};
    const auto r = gen_z2_rect(zeros);
    EXPECT_TRUE(validate(r.drawing, ValidationMode::generic).valid());
    // With equal heights every cycle has area far below one column.
    const Arrangement arr(r.drawing);
    for (const auto& z : cycle_space(5)) EXPECT_LT(z2_area(arr, z), ratio(1, 4));
}

TEST(Z2Rect, GeometryMatchesColumnParity) {
    const auto r = gen_z2_rect({4, 12, 7, Scalar(0), {}});
    const Arrangement arr(r.drawing);
    const Scalar slack = 4 * 12 * r.eta * edge_count(4);
    EXPECT_LE(slack, ratio(1, 4));
    for (const auto& z : cycle_space(4)) {
        const Scalar gap = abs(z2_area(arr, z) - bit_model_area(r.bits, z));
        EXPECT_LE(gap, slack) << format_chain(4, z);
    }
}

TEST(Z2Rect, RejectsBadSpecs) {
    EXPECT_THROW(gen_z2_rect({1, 3, 0, Scalar(0), {}}), PreconditionError);
    EXPECT_THROW(gen_z2_rect({3, 0, 0, Scalar(0), {}}), PreconditionError);
    EXPECT_THROW(gen_z2_rect({3, 2, 0, Scalar(1), {}}), PreconditionError);
}
