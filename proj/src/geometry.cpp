#include "topoface/geometry.hpp"

#include "topoface/errors.hpp"

#include <algorithm>

namespace topoface {

bool lex_less(const Point& a, const Point& b) {
    const int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
}

Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

int orientation(const Point& a, const Point& b, const Point& c) {
    const Scalar lhs = (b.x - a.x) * (c.y - a.y);
    const Scalar rhs = (b.y - a.y) * (c.x - a.x);
    return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

namespace {

// 0 for angles in (-pi, 0] ... split as: upper half (y > 0 or y == 0 && x < 0) vs lower.
int half_plane(const Point& u) {
    const int sy = sgn(u.y);
    if (sy < 0 || (sy == 0 && sgn(u.x) > 0)) return 0; // angle in (-pi, 0]
    return 1;                                          // angle in (0, pi]
}

bool within_box(const Point& p, const Point& a, const Point& b) {
    const auto& [xlo, xhi] = std::minmax(a.x, b.x, [](const Scalar& l, const Scalar& r) { return l < r; });
    const auto& [ylo, yhi] = std::minmax(a.y, b.y, [](const Scalar& l, const Scalar& r) { return l < r; });
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

} // namespace

bool angle_less(const Point& u, const Point& v) {
    const int hu = half_plane(u);
    const int hv = half_plane(v);
    if (hu != hv) return hu < hv;
    return sgn(cross(u, v)) > 0;
}

SegmentIntersection seg_intersect(const Segment& s, const Segment& t) {
    const Point& a = s.a;
    const Point& b = s.b;
    const Point& c = t.a;
    const Point& d = t.b;
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: intersect the parameter ranges along the dominant axis.
        const bool use_x = a.x != b.x;
        auto key = [&](const Point& p) -> const Scalar& { return use_x ? p.x : p.y; };
        Scalar lo1 = key(a), hi1 = key(b);
        if (hi1 < lo1) std::swap(lo1, hi1);
        Scalar lo2 = key(c), hi2 = key(d);
        if (hi2 < lo2) std::swap(lo2, hi2);
        const Scalar& lo = lo1 < lo2 ? lo2 : lo1;
        const Scalar& hi = hi1 < hi2 ? hi1 : hi2;
        if (hi < lo) return {};
        if (lo < hi) return {SegmentRelation::overlap, {}};
        for (const Point* p : {&a, &b}) {
            if (key(*p) == lo) return {SegmentRelation::touch, *p};
        }
        return {};
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return {};
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        const Point r = b - a;
        const Point q = d - c;
        const Scalar param = cross(c - a, q) / cross(r, q);
        return {SegmentRelation::proper, a + param * r};
    }
    if (o1 == 0 && within_box(c, a, b)) return {SegmentRelation::touch, c};
    if (o2 == 0 && within_box(d, a, b)) return {SegmentRelation::touch, d};
    if (o3 == 0 && within_box(a, c, d)) return {SegmentRelation::touch, a};
    if (o4 == 0 && within_box(b, c, d)) return {SegmentRelation::touch, b};
    return {};
}

std::vector<PolylineCrossing> polyline_crossings(const Polyline& a, const Polyline& b) {
    std::vector<PolylineCrossing> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            const Segment sa{a[i], a[i + 1]};
            const Segment sb{b[j], b[j + 1]};
            const auto hit = seg_intersect(sa, sb);
            switch (hit.relation) {
            case SegmentRelation::none:
                break;
            case SegmentRelation::overlap:
                throw DegeneracyError("polylines overlap along a segment");
            case SegmentRelation::touch:
                throw DegeneracyError("polylines touch without crossing properly");
            case SegmentRelation::proper: {
                const Point r = sa.b - sa.a;
                const Point q = sb.b - sb.a;
                const Scalar den = cross(r, q);
                const Scalar ta = cross(sb.a - sa.a, q) / den;
                const Scalar tb = cross(sb.a - sa.a, r) / den;
                out.push_back({hit.point, Scalar(static_cast<long>(i)) + ta,
                               Scalar(static_cast<long>(j)) + tb});
                break;
            }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PolylineCrossing& l, const PolylineCrossing& r) { return l.along_a < r.along_a; });
    return out;
}

namespace {

// 1 if the open ray crosses the segment properly, 0 if it misses; throws when degenerate.
int ray_hits_segment(const Point& p, const Point& dir, const Point& a, const Point& b) {
    const int oa = sgn(cross(dir, a - p));
    const int ob = sgn(cross(dir, b - p));
    if (oa == 0 && sgn(dot(a - p, dir)) >= 0) throw DegeneracyError("ray meets a polyline point");
    if (ob == 0 && sgn(dot(b - p, dir)) >= 0) throw DegeneracyError("ray meets a polyline point");
    if (oa == 0 || ob == 0 || oa == ob) return 0;
    const Point e = b - a;
    // p + t*dir on the segment line: t = cross(a - p, e) / cross(dir, e).
    const int sn = sgn(cross(a - p, e));
    const int sd = sgn(cross(dir, e));
    if (sn == 0) throw DegeneracyError("ray origin lies on a curve");
    return sn == sd ? 1 : 0;
}

} // namespace

bool ray_parity(const Point& p, const Point& direction, std::span<const Polyline* const> curves) {
    if (sgn(direction.x) == 0 && sgn(direction.y) == 0) throw DegeneracyError("zero ray direction");
    int parity = 0;
    for (const Polyline* curve : curves) {
        for (std::size_t i = 0; i + 1 < curve->size(); ++i) {
            parity ^= ray_hits_segment(p, direction, (*curve)[i], (*curve)[i + 1]);
        }
    }
    return parity != 0;
}

bool ray_parity(const Point& p, const Point& direction, std::span<const Polyline> curves) {
    std::vector<const Polyline*> ptrs;
    ptrs.reserve(curves.size());
    for (const auto& c : curves) ptrs.push_back(&c);
    return ray_parity(p, direction, ptrs);
}

Point ray_direction(int k) {
    const long kk = k;
    long dx = ((kk * 7919 + 104729) % 2001) - 1000;
    long dy = ((kk * 6271 + 1299709) % 2003) - 1001;
    if (dx == 0 && dy == 0) dx = 1;
    return {dx, dy};
}

bool ray_parity_auto(const Point& p, std::span<const Polyline* const> curves) {
    constexpr int kMaxAttempts = 64;
    for (int k = 0; k < kMaxAttempts; ++k) {
        try {
            return ray_parity(p, ray_direction(k), curves);
        } catch (const DegeneracyError&) {
        }
    }
    throw DegeneracyError("no generic ray direction found; point lies on a curve");
}

Scalar signed_area(std::span<const Point> ring) {
    Scalar twice = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % ring.size()];
        twice += p.x * q.y - p.y * q.x;
    }
    return twice / 2;
}

PolygonArea polygon_area(std::span<const Point> ring) {
    if (ring.size() < 3) return {Scalar(0), true};
    bool collinear = true;
    for (std::size_t i = 2; i < ring.size() && collinear; ++i) {
        collinear = orientation(ring[0], ring[1], ring[i]) == 0;
    }
    if (collinear) return {Scalar(0), true};

    const std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (ring[i] == ring[(i + 1) % m]) throw NotSimpleError("repeated consecutive polygon point");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Segment si{ring[i], ring[(i + 1) % m]};
        for (std::size_t j = i + 1; j < m; ++j) {
            const Segment sj{ring[j], ring[(j + 1) % m]};
            const auto hit = seg_intersect(si, sj);
            if (hit.relation == SegmentRelation::none) continue;
            const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent && hit.relation == SegmentRelation::touch) continue;
            throw NotSimpleError("polygon boundary self-intersects");
        }
    }
    Scalar area = signed_area(ring);
    if (sgn(area) < 0) area = -area;
    return {area, false};
}

} // namespace topoface
