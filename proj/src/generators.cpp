#include "topoface/generators.hpp"

#include "topoface/arrangement.hpp"
#include "topoface/errors.hpp"

#include <algorithm>
#include <random>

namespace topoface {

namespace {

// Level of edge (i, j), 1-based indices: (1, 2) is outermost at level E and
// (n-1, n) innermost at level 1.
long twisted_level(int n, int i, int j) {
    const long rank = edge_index(n, i - 1, j - 1);
    return edge_count(n) - rank;
}

// Crossing edge pairs must be exactly the nested index pairs, each crossing once.
void check_nested_rule(const Arrangement& arr) {
    const TopoDrawing& d = arr.drawing();
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        const auto [i, j] = d.endpoints(e);
        for (EdgeId f = e + 1; f < d.edge_count(); ++f) {
            const auto [k, l] = d.endpoints(f);
            const bool nested = (i < k && l < j) || (k < i && j < l);
            if (arr.crossings_between(e, f) != (nested ? 1 : 0)) {
                throw ConstructionError("twisted routing breaks the nested crossing rule at edges " +
                                        std::to_string(e) + " and " + std::to_string(f));
            }
        }
    }
}

void check_simple(const TopoDrawing& d, const char* what) {
    const auto report = validate(d, ValidationMode::simple);
    if (!report.valid()) {
        throw ConstructionError(std::string(what) + " is not a valid simple drawing: " +
                                to_string(report.violations.front().kind));
    }
}

} // namespace

TopoDrawing gen_twisted(int n) {
    if (n < 1) throw PreconditionError("gen_twisted needs n >= 1");
    const long u = 4L * n * n;
    std::vector<Point> vertices;
    for (int i = 1; i <= n; ++i) vertices.emplace_back(u * i, 0L);
    std::vector<Polyline> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const long level = twisted_level(n, i, j);
            const long rise = static_cast<long>(j - i) * 2 * n;
            const long drop = static_cast<long>(i) * 2 * n;
            const long right = u * (n + 1) + level;
            edges.push_back({Point(u * i, 0L), Point(u * i + rise, level), Point(right, level), Point(right, -level),
                             Point(u * j + drop, -level), Point(u * j, 0L)});
        }
    }
    TopoDrawing d(std::move(vertices), std::move(edges));
    check_simple(d, "twisted drawing");
    check_nested_rule(Arrangement(d));
    return d;
}

Point twisted_probe(int n) {
    const long u = 4L * n * n;
    return {u * n + 3 * u / 4, 0L};
}

TwistedSquare gen_twisted_square(int n, const Scalar& eps, int check_limit) {
    if (n < 1) throw PreconditionError("gen_twisted_square needs n >= 1");
    if (sgn(eps) <= 0 || eps >= 1) throw PreconditionError("gen_twisted_square needs 0 < eps < 1");
    const Scalar delta = eps / 4;
    const Scalar half = delta / 2;
    const Scalar gap = delta / (n + 1);
    const long levels = edge_count(n) + 1;
    std::vector<Point> vertices;
    for (int i = 1; i <= n; ++i) vertices.emplace_back(gap * i, half);
    std::vector<Polyline> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Scalar step = ratio(twisted_level(n, i, j), levels) * half;
            const Scalar high = 1 - half + step;
            const Scalar low = half - step;
            const Scalar rise = gap * ratio(j - i, 2 * n);
            const Scalar drop = gap * ratio(i, 2 * n);
            edges.push_back({vertices[i - 1], Point(gap * i + rise, high), Point(high, high), Point(high, low),
                             Point(gap * j + drop, low), vertices[j - 1]});
        }
    }
    TwistedSquare out{TopoDrawing(std::move(vertices), std::move(edges)), Point((delta + 1 - half) / 2, ratio(1, 2))};
    check_simple(out.drawing, "twisted square drawing");
    const Arrangement arr(out.drawing);
    check_nested_rule(arr);
    if (n <= check_limit) {
        const Scalar floor = 1 - eps;
        for (int k = 3; k <= n; k += 2) {
            for (const auto& cycle : jordan_cycles(arr, k)) {
                const auto area = polygon_area(cycle_ring(out.drawing, cycle)).area;
                if (area < floor) {
                    throw ConstructionError("odd face of a " + std::to_string(k) + "-cycle has area " +
                                            format_scalar(area) + " below 1 - eps");
                }
            }
        }
    }
    return out;
}

TopoDrawing gen_straightline(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 1) throw GeneralPositionError("no points given");
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (points[a] == points[b]) throw GeneralPositionError("repeated point");
            for (int c = b + 1; c < n; ++c) {
                if (orientation(points[a], points[b], points[c]) == 0) {
                    throw GeneralPositionError("points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                               std::to_string(c) + " are collinear");
                }
            }
        }
    }
    std::vector<Polyline> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.push_back({points[a], points[b]});
    }
    TopoDrawing d(points, std::move(edges));
    const auto report = validate(d, ValidationMode::simple);
    if (!report.valid()) {
        throw GeneralPositionError("straight-line drawing is degenerate: " + to_string(report.violations.front().kind));
    }
    return d;
}

std::vector<Point> random_points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Scalar unit = ratio(1, 1L << 20);
    auto draw = [&] {
        const auto x = static_cast<long>(rng() >> 44);
        const auto y = static_cast<long>(rng() >> 44);
        return Point(x * unit, y * unit);
    };
    std::vector<Point> points;
    auto fits = [&](const Point& p, int skip) {
        for (int a = 0; a < static_cast<int>(points.size()); ++a) {
            if (a == skip) continue;
            if (points[a] == p) return false;
            for (int b = a + 1; b < static_cast<int>(points.size()); ++b) {
                if (b != skip && orientation(points[a], points[b], p) == 0) return false;
            }
        }
        return true;
    };
    while (static_cast<int>(points.size()) < n) {
        const Point p = draw();
        if (fits(p, -1)) points.push_back(p);
    }
    // Concurrent crossings are rare; resample an endpoint of an offending edge.
    for (int attempt = 0;; ++attempt) {
        std::vector<Polyline> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) edges.push_back({points[a], points[b]});
        }
        const TopoDrawing d(points, std::move(edges));
        const auto report = validate(d, ValidationMode::generic);
        if (report.valid()) return points;
        if (attempt >= 1000) throw GeneralPositionError("could not sample points in general position");
        const VertexId v = d.endpoints(report.violations.front().edge_a).second;
        Point p = draw();
        while (!fits(p, v)) p = draw();
        points[v] = p;
    }
}

TopoDrawing gen_random_straightline(int n, std::uint64_t seed) { return gen_straightline(random_points(n, seed)); }

std::vector<std::vector<char>> z2_rect_bits(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<char>> bits(edge_count(n), std::vector<char>(m));
    for (auto& row : bits) {
        for (auto& b : row) b = static_cast<char>(rng() >> 63);
    }
    return bits;
}

Z2Rect gen_z2_rect(const Z2RectSpec& spec) {
    const int n = spec.n;
    const int m = spec.m;
    if (n < 2 || m < 1) throw PreconditionError("gen_z2_rect needs n >= 2 and m >= 1");
    const int e_count = edge_count(n);
    Z2Rect out;
    out.bits = spec.bits.empty() ? z2_rect_bits(n, m, spec.seed) : spec.bits;
    if (static_cast<int>(out.bits.size()) != e_count) throw PreconditionError("one bit row per edge expected");
    for (const auto& row : out.bits) {
        if (static_cast<int>(row.size()) != m) throw PreconditionError("one bit per column expected");
    }
    out.eta = sgn(spec.eta) > 0 ? spec.eta : ratio(1, 64L * e_count * (m + 2));
    if (out.eta * 4 * e_count * (m + 2) >= 1) throw PreconditionError("lane offset too large for disjoint lanes");

    // Vertices sit below every lane, left of the rectangle, each lower than the
    // ones to its right so that no edge's return passes above its own start.
    const Scalar sigma = 2 * e_count * out.eta;
    std::vector<Point> vertices;
    for (int i = 0; i < n; ++i) vertices.emplace_back(-sigma * (i + 1), -sigma * (1 + ratio(i * i + 1, n * n + 2)));
    std::vector<Polyline> edges;
    EdgeId e = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++e) {
            const Scalar lane = out.eta * (e + 1);
            const auto& y = out.bits[e];
            Polyline pl{vertices[i], Point(lane, y[0] + lane)};
            for (int k = 1; k < m; ++k) {
                if (y[k] != y[k - 1]) {
                    pl.emplace_back(k + lane, y[k - 1] + lane);
                    pl.emplace_back(k + lane, y[k] + lane);
                }
            }
            pl.emplace_back(m + lane, y[m - 1] + lane);
            pl.emplace_back(m + lane, -lane);
            pl.push_back(vertices[j]);
            edges.push_back(std::move(pl));
        }
    }
    out.drawing = TopoDrawing(std::move(vertices), std::move(edges));
    const auto report = validate(out.drawing, ValidationMode::generic);
    if (!report.valid()) {
        const auto& v = report.violations.front();
        throw ConstructionError("rectangle drawing is not generic: " + to_string(v.kind) + " edges " +
                                std::to_string(v.edge_a) + "," + std::to_string(v.edge_b) + " at " +
                                format_scalar(v.witness.x) + "," + format_scalar(v.witness.y));
    }
    return out;
}

} // namespace topoface
