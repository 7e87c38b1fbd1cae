#include "testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace testkit {

Point random_point(std::mt19937_64& rng, const Scalar& lo, const Scalar& hi) {
    const Scalar unit = ratio(1, 1L << 20);
    const auto coord = [&]() -> Scalar { return lo + (hi - lo) * static_cast<long>(rng() >> 44) * unit; };
    const Scalar x = coord();
    return {x, coord()};
}

TopoDrawing convex_drawing(int n) {
    std::vector<Point> points;
    const long r = 1L << 20;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * M_PI * i / n;
        points.emplace_back(std::lround(r * std::cos(a)) + 7 * i, std::lround(r * std::sin(a)) + 3 * i * i);
    }
    return gen_straightline(points);
}

TopoDrawing inverted_convex_k5() {
    const std::vector<Point> pts{Point(0L, 100L), Point(95L, 31L), Point(59L, -81L), Point(-59L, -81L),
                                 Point(-95L, 31L)};
    const Point q(ratio(1, 7), ratio(2, 9));
    const auto invert = [&](const Point& x) {
        const Point d = x - q;
        return q + (1 / Scalar(d.x * d.x + d.y * d.y)) * d;
    };
    const int steps = 32;
    std::vector<Point> vertices;
    for (const auto& p : pts) vertices.push_back(invert(p));
    std::vector<Polyline> edges;
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) {
            Polyline line;
            for (int s = 0; s <= steps; ++s) line.push_back(invert(pts[u] + ratio(s, steps) * (pts[v] - pts[u])));
            edges.push_back(std::move(line));
        }
    }
    return TopoDrawing(vertices, edges);
}

namespace {

bool general(const std::vector<Point>& pts, const Point& p) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
        if (pts[a] == p) return false;
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (orientation(pts[a], pts[b], p) == 0) return false;
        }
    }
    return true;
}

bool strictly_inside(const std::vector<Point>& poly, const Point& p) {
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (orientation(poly[i], poly[(i + 1) % k], p) <= 0) return false;
    }
    return true;
}

} // namespace

KeyInstance key_instance(int k, std::uint64_t seed, bool nested) {
    std::mt19937_64 rng(seed);
    const long r = 1L << 20;
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) {
        const double a = 2 * M_PI * i / k;
        pts.emplace_back(std::lround(r * std::cos(a)) + static_cast<long>(rng() % 5000),
                         std::lround(r * std::sin(a)) + static_cast<long>(rng() % 5000));
    }
    const std::vector<Point> poly = pts;
    const int total = k + 6 * (k - 4);
    int ring = 0;
    while (static_cast<int>(pts.size()) < total) {
        Point p;
        if (nested) {
            // Three points per triangle, each triangle a rotated, smaller copy.
            const int t = ring / 3;
            const double scale = 0.8 * std::pow(0.7, t);
            const double a = 2 * M_PI * (ring % 3) / 3 + 0.3 * t;
            const long jitter = static_cast<long>(rng() % 2000);
            p = Point(std::lround(scale * r * std::cos(a)) + jitter, std::lround(scale * r * std::sin(a)) - jitter);
        } else {
            p = Point(static_cast<long>(rng() % (2 * r)) - r, static_cast<long>(rng() % (2 * r)) - r);
        }
        if (!strictly_inside(poly, p) || !general(pts, p)) continue;
        pts.push_back(p);
        ++ring;
    }

    std::vector<VertexId> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> shuffled(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) shuffled[perm[i]] = pts[i];

    KeyInstance out{gen_straightline(shuffled), {}, {}};
    out.polygon.assign(perm.begin(), perm.begin() + k);
    out.interior.assign(perm.begin() + k, perm.end());
    return out;
}

PlaneSubgraph polygon_subgraph(const Arrangement& arr, const KeyInstance& inst) {
    const auto& d = arr.drawing();
    const int k = static_cast<int>(inst.polygon.size());
    std::vector<EdgeId> edges;
    for (int i = 0; i < k; ++i) edges.push_back(d.edge_id(inst.polygon[i], inst.polygon[(i + 1) % k]));
    return PlaneSubgraph(arr, edges);
}

ChainInstance chain_instance(int pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto wiggle = [&] { return ratio(static_cast<long>(rng() % 1000), 100000); };
    std::vector<Point> pts{Point(0L, 0L)};
    for (int i = 0; i < pairs; ++i) {
        const Scalar y = 100 - 3 * i + wiggle();
        const Scalar s = ratio(50 - i, 100);
        pts.emplace_back(-s * y + wiggle(), y);
        pts.emplace_back(s * y + wiggle(), y + wiggle());
    }
    ChainInstance out{gen_straightline(pts), {}};
    for (int i = 0; i < pairs; ++i) out.links.push_back(out.drawing.edge_id(1 + 2 * i, 2 + 2 * i));
    return out;
}

bool subset(const CellSet& inner, const CellSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

} // namespace testkit
