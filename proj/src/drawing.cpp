#include "topoface/drawing.hpp"

#include "intersections.hpp"
#include "topoface/arrangement.hpp"
#include "topoface/errors.hpp"

#include <algorithm>

namespace topoface {

TopoDrawing::TopoDrawing(std::vector<Point> vertices, std::vector<Polyline> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = static_cast<int>(vertices_.size());
    if (n < 1) throw InvalidDrawing("a drawing needs at least one vertex");
    if (static_cast<int>(edges_.size()) != topoface::edge_count(n)) {
        throw InvalidDrawing("expected " + std::to_string(topoface::edge_count(n)) + " edges, got " +
                             std::to_string(edges_.size()));
    }
    std::vector<Point> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidDrawing("two vertices share a point");
    }
    ends_.reserve(edges_.size());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const auto& pl = edges_[ends_.size()];
            const std::string name = "edge " + std::to_string(u) + "-" + std::to_string(v);
            if (pl.size() < 2) throw InvalidDrawing(name + " has fewer than two points");
            if (pl.front() != vertices_[u] || pl.back() != vertices_[v]) {
                throw InvalidDrawing(name + " does not join its endpoints");
            }
            for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
                if (pl[i] == pl[i + 1]) throw InvalidDrawing(name + " repeats a point");
            }
            ends_.emplace_back(u, v);
        }
    }
}

EdgeId TopoDrawing::edge_id(VertexId u, VertexId v) const {
    if (u == v || u < 0 || v < 0 || u >= n() || v >= n()) {
        throw InvalidDrawing("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return edge_index(n(), u, v);
}

VertexId TopoDrawing::other_end(EdgeId e, VertexId v) const {
    const auto [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw InvalidDrawing("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::self_intersection: return "self_intersection";
    case ViolationKind::passes_through_vertex: return "passes_through_vertex";
    case ViolationKind::touching: return "touching";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::concurrent_crossings: return "concurrent_crossings";
    case ViolationKind::multiple_crossings: return "multiple_crossings";
    case ViolationKind::adjacent_crossing: return "adjacent_crossing";
    }
    return "unknown";
}

ValidationReport validate(const TopoDrawing& d, ValidationMode mode) {
    const auto scan = detail::scan_intersections(d, false);
    ValidationReport report;
    report.mode = mode;
    report.crossing_count = static_cast<std::int64_t>(scan.crossings.size());
    for (const auto& issue : scan.issues) {
        report.violations.push_back({issue.edge_a, issue.edge_b, issue.kind, issue.witness});
    }
    if (mode == ValidationMode::simple) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
        keyed.reserve(scan.crossings.size());
        for (std::uint32_t c = 0; c < scan.crossings.size(); ++c) {
            const auto ea = static_cast<std::uint64_t>(scan.segments[scan.crossings[c].seg_a].edge);
            const auto eb = static_cast<std::uint64_t>(scan.segments[scan.crossings[c].seg_b].edge);
            keyed.emplace_back((std::min(ea, eb) << 32) | std::max(ea, eb), c);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            const auto ea = static_cast<EdgeId>(keyed[i].first >> 32);
            const auto eb = static_cast<EdgeId>(keyed[i].first & 0xffffffffu);
            const Point w = detail::crossing_point(d, scan, keyed[i].second);
            if (j - i >= 2) report.violations.push_back({ea, eb, ViolationKind::multiple_crossings, w});
            const auto [a0, a1] = d.endpoints(ea);
            const auto [b0, b1] = d.endpoints(eb);
            if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) {
                report.violations.push_back({ea, eb, ViolationKind::adjacent_crossing, w});
            }
            i = j;
        }
    }
    return report;
}

namespace {

// Direction in which edge e leaves vertex v.
Point departure(const TopoDrawing& d, EdgeId e, VertexId v) {
    const auto& pl = d.edge(e);
    if (d.endpoints(e).first == v) return pl[1] - pl[0];
    return pl[pl.size() - 2] - pl.back();
}

bool lower_half(const Point& u) { return sgn(u.y) < 0 || (sgn(u.y) == 0 && sgn(u.x) > 0); }

} // namespace

Rotation rotation_at(const TopoDrawing& d, VertexId v) {
    Rotation rot;
    rot.vertex = v;
    std::vector<std::pair<Point, EdgeId>> dirs;
    for (VertexId u = 0; u < d.n(); ++u) {
        if (u == v) continue;
        const EdgeId e = d.edge_id(u, v);
        dirs.emplace_back(departure(d, e, v), e);
    }
    std::sort(dirs.begin(), dirs.end(), [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        if (!angle_less(dirs[i].first, dirs[i + 1].first)) {
            throw DegeneracyError("edges " + std::to_string(dirs[i].second) + " and " +
                                  std::to_string(dirs[i + 1].second) + " leave vertex " + std::to_string(v) +
                                  " in the same direction");
        }
    }
    // Clockwise, starting at the first direction at or below the positive x axis.
    std::reverse(dirs.begin(), dirs.end());
    const auto start = std::find_if(dirs.begin(), dirs.end(), [](const auto& p) { return lower_half(p.first); });
    std::rotate(dirs.begin(), start, dirs.end());
    for (const auto& [dir, e] : dirs) rot.clockwise.push_back(e);
    return rot;
}

std::vector<VertexId> clockwise_labels(const TopoDrawing& d, VertexId v0) {
    return clockwise_labels(Arrangement(d), v0);
}

std::vector<VertexId> outer_vertices(const TopoDrawing& d) { return outer_vertices(Arrangement(d)); }

namespace {

// For every edge, the edges it crosses in order along it.
std::vector<std::vector<EdgeId>> partner_sequences(const TopoDrawing& d) {
    const auto scan = detail::scan_intersections(d, true);
    std::vector<std::vector<EdgeId>> out(d.edge_count());
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        for (auto s = scan.edge_first_segment[e]; s < scan.edge_first_segment[e + 1]; ++s) {
            for (auto k = scan.order_offset[s]; k < scan.order_offset[s + 1]; ++k) {
                const auto& c = scan.crossings[scan.order[k]];
                const EdgeId other = scan.segments[c.seg_a].edge == e ? scan.segments[c.seg_b].edge
                                                                      : scan.segments[c.seg_a].edge;
                out[e].push_back(other);
            }
        }
    }
    return out;
}

Point invert(const Point& x, const Point& q) {
    const Point r = x - q;
    const Scalar norm = dot(r, r);
    return q + (1 / norm) * r;
}

} // namespace

bool weak_isomorphic(const TopoDrawing& a, const TopoDrawing& b) {
    if (a.n() != b.n()) return false;
    return partner_sequences(a) == partner_sequences(b);
}

TopoDrawing ensure_outer_vertex(const TopoDrawing& d, const ReprojectionOptions& options) {
    const Arrangement arr(d);
    if (!outer_vertices(arr).empty()) return d;

    const VertexId v0 = 0;
    const Point q = arr.cell_point(arr.cells_at_vertex(v0).front());
    std::size_t base_segments = 0;
    for (const auto& pl : d.edges()) base_segments += pl.size() - 1;

    std::vector<Point> vertices;
    for (const auto& p : d.vertices()) vertices.push_back(invert(p, q));

    for (int round = 0; round < options.max_rounds; ++round) {
        const long pieces = 1L << round;
        if (base_segments * static_cast<std::size_t>(pieces) > static_cast<std::size_t>(options.max_segments)) break;
        std::vector<Polyline> edges;
        edges.reserve(d.edges().size());
        for (const auto& pl : d.edges()) {
            Polyline image;
            for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
                const Point step = ratio(1, pieces) * (pl[i + 1] - pl[i]);
                for (long k = 0; k < pieces; ++k) image.push_back(invert(pl[i] + Scalar(k) * step, q));
            }
            image.push_back(invert(pl.back(), q));
            edges.push_back(std::move(image));
        }
        try {
            TopoDrawing candidate(vertices, std::move(edges));
            if (!validate(candidate, ValidationMode::generic).valid()) continue;
            if (!weak_isomorphic(d, candidate)) continue;
            const auto outer = outer_vertices(Arrangement(candidate));
            if (std::find(outer.begin(), outer.end(), v0) == outer.end()) continue;
            return candidate;
        } catch (const DegeneracyError&) {
        }
    }
    throw ReprojectionFailure("inversion did not converge within the segment budget");
}

} // namespace topoface
