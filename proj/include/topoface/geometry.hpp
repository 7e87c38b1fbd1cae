#pragma once

#include "topoface/scalar.hpp"

#include <span>
#include <vector>

namespace topoface {

struct Point {
    Scalar x;
    Scalar y;

    Point() = default;
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
};

/// Lexicographic (x, then y) order.
bool lex_less(const Point& a, const Point& b);

/// Piecewise-linear arc; consecutive points distinct.
using Polyline = std::vector<Point>;

struct Segment {
    Point a;
    Point b;
};

Scalar cross(const Point& u, const Point& v);
Scalar dot(const Point& u, const Point& v);

/// Sign of cross(b - a, c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Sorts direction vectors counterclockwise by angle in (-pi, pi].
bool angle_less(const Point& u, const Point& v);

enum class SegmentRelation { none, proper, touch, overlap };

struct SegmentIntersection {
    SegmentRelation relation = SegmentRelation::none;
    Point point; // meaningful for proper and touch
};

/// Total classification of how two closed segments meet.
SegmentIntersection seg_intersect(const Segment& s, const Segment& t);

/// Position along a polyline: segment index plus the fraction within it.
struct PolylineCrossing {
    Point point;
    Scalar along_a;
    Scalar along_b;
};

/// All proper crossings of two polylines, sorted along `a`.
/// Throws DegeneracyError if they touch, overlap, or cross at a bend point.
std::vector<PolylineCrossing> polyline_crossings(const Polyline& a, const Polyline& b);

/// Parity of proper crossings of the open ray p + t*direction (t > 0) with the curves.
/// Throws DegeneracyError when the ray meets a polyline point or runs along a segment.
bool ray_parity(const Point& p, const Point& direction, std::span<const Polyline* const> curves);
bool ray_parity(const Point& p, const Point& direction, std::span<const Polyline> curves);

/// k-th entry of the fixed sequence of rational ray directions.
Point ray_direction(int k);

/// ray_parity with the first non-degenerate direction of ray_direction(0, 1, ...).
bool ray_parity_auto(const Point& p, std::span<const Polyline* const> curves);

/// Shoelace signed area of the closed ring (last point joins the first).
Scalar signed_area(std::span<const Point> ring);

struct PolygonArea {
    Scalar area;
    bool degenerate = false; // all points collinear
};

/// Exact area of a simple closed polygon. Throws NotSimpleError if the
/// boundary self-intersects; all-collinear input yields 0 flagged degenerate.
PolygonArea polygon_area(std::span<const Point> ring);

} // namespace topoface
