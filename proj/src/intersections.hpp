#pragma once

// Pairwise segment intersection scan shared by validation and planarization.

#include "topoface/drawing.hpp"

#include <cstdint>
#include <vector>

namespace topoface::detail {

struct SegmentRef {
    EdgeId edge;
    int index; // segment i joins polyline points i and i + 1
};

struct CrossingRecord {
    std::uint32_t seg_a; // global segment ids; seg_a belongs to the smaller edge id
    std::uint32_t seg_b;
    std::int8_t turn;    // sign of cross(direction of seg_a, direction of seg_b)
};

struct Issue {
    EdgeId edge_a;
    EdgeId edge_b;
    ViolationKind kind;
    Point witness;
};

struct IntersectionScan {
    std::vector<SegmentRef> segments;
    std::vector<std::uint32_t> edge_first_segment; // size E + 1
    std::vector<CrossingRecord> crossings;
    // CSR: for segment s, crossing ids sorted along the segment direction are
    // order[order_offset[s] .. order_offset[s + 1]).
    std::vector<std::uint32_t> order_offset;
    std::vector<std::uint32_t> order;
    std::vector<Issue> issues;
    bool integer_kernel = false;
};

/// Finds every proper crossing between distinct edges and every departure from
/// general position. With stop_at_first_issue the scan throws DegeneracyError
/// at the first issue instead of collecting it.
IntersectionScan scan_intersections(const TopoDrawing& d, bool stop_at_first_issue);

/// Exact crossing point of two properly crossing segments ab and cd.
Point crossing_point(const Point& a, const Point& b, const Point& c, const Point& d);

Point crossing_point(const TopoDrawing& d, const IntersectionScan& scan, std::uint32_t crossing);

} // namespace topoface::detail
