#pragma once

#include "topoface/drawing.hpp"

#include <span>
#include <vector>

namespace topoface {

using NodeId = int;     // vertices 0..n-1, then crossings
using ArcId = int;
using HalfEdgeId = int; // 2a runs along arc a in edge direction, 2a + 1 against it
using CellId = int;

/// Sorted list of cell ids.
using CellSet = std::vector<CellId>;

/// The planar cell complex of a drawing: every crossing becomes a node and
/// every edge is cut into arcs between consecutive nodes.
class Arrangement {
public:
    /// Planarizes d. Throws DegeneracyError if d is not in general position.
    explicit Arrangement(TopoDrawing d);

    const TopoDrawing& drawing() const { return drawing_; }

    int node_count() const { return n_ + static_cast<int>(crossings_.size()); }
    int vertex_count() const { return n_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    Point node_point(NodeId v) const;

    int arc_count() const { return static_cast<int>(arcs_.size()); }
    EdgeId arc_edge(ArcId a) const { return arcs_[a].edge; }
    NodeId arc_from(ArcId a) const { return arcs_[a].from; }
    NodeId arc_to(ArcId a) const { return arcs_[a].to; }
    Polyline arc_polyline(ArcId a) const;
    /// Arcs of edge e are first..last-1, ordered along e.
    ArcId edge_arc_begin(EdgeId e) const { return edge_arc_offset_[e]; }
    ArcId edge_arc_end(EdgeId e) const { return edge_arc_offset_[e + 1]; }

    int half_edge_count() const { return 2 * arc_count(); }
    NodeId origin(HalfEdgeId h) const { return (h & 1) ? arcs_[h >> 1].to : arcs_[h >> 1].from; }
    NodeId target(HalfEdgeId h) const { return origin(h ^ 1); }
    HalfEdgeId next(HalfEdgeId h) const { return next_[h]; }
    /// Cell on the left of h.
    CellId cell_of(HalfEdgeId h) const { return cell_of_[h]; }
    Polyline half_edge_polyline(HalfEdgeId h) const;

    int cell_count() const { return static_cast<int>(cell_first_.size()); }
    CellId outer_cell() const { return outer_; }
    /// Boundary walk of a cell, counterclockwise for bounded cells.
    std::vector<HalfEdgeId> cell_boundary(CellId c) const;
    /// Closed ring of points along the boundary walk (last point not repeated).
    Polyline cell_ring(CellId c) const;
    /// Exact area of a bounded cell; PreconditionError for the outer cell.
    Scalar cell_area(CellId c) const;
    /// A rational point in the open cell.
    Point cell_point(CellId c) const;

    /// Outgoing half-edges at a vertex, counterclockwise by departure direction.
    std::span<const HalfEdgeId> vertex_rotation(VertexId v) const;
    /// Cells touching vertex v, one per wedge, in counterclockwise order.
    std::vector<CellId> cells_at_vertex(VertexId v) const;

    /// Edges crossed by e, in order along e (an edge may repeat).
    std::span<const EdgeId> crossing_partners(EdgeId e) const;
    int crossings_between(EdgeId e, EdgeId f) const;

    /// Cell containing p. Throws OnBoundaryError if p lies on an arc or node.
    CellId locate(const Point& p) const;

    /// Z2 filling of an edge chain: flag per cell, flipped across every arc
    /// whose edge is flagged. PreconditionError if the chain has a boundary.
    std::vector<char> parity_fill(const std::vector<char>& edge_in_chain) const;

private:
    struct Arc {
        EdgeId edge;
        NodeId from;
        NodeId to;
        int seg_first; // polyline segment holding `from`
        int seg_last;  // polyline segment holding `to`
    };
    struct Crossing {
        EdgeId edge_a;
        int seg_a;
        EdgeId edge_b;
        int seg_b;
    };

    TopoDrawing drawing_;
    int n_ = 0;
    std::vector<Crossing> crossings_;
    std::vector<Arc> arcs_;
    std::vector<ArcId> edge_arc_offset_;
    std::vector<HalfEdgeId> next_;
    std::vector<CellId> cell_of_;
    std::vector<HalfEdgeId> cell_first_;
    CellId outer_ = 0;
    std::vector<int> rotation_offset_;
    std::vector<HalfEdgeId> rotation_;
    std::vector<int> partner_offset_;
    std::vector<EdgeId> partners_;
};

Arrangement planarize(const TopoDrawing& d);

enum class CycleMode {
    z2,     // any closed walk; insides by parity
    jordan, // the cycle's edges must be pairwise non-crossing
};

/// Cells with odd linking number against the closed walk through `cycle`.
/// Throws NotJordanError in jordan mode when two cycle edges cross.
CellSet cells_inside_cycle(const Arrangement& arr, std::span<const VertexId> cycle, CycleMode mode = CycleMode::z2);

/// Cells inside an even-degree edge set.
CellSet cells_inside_edges(const Arrangement& arr, std::span<const EdgeId> edges);

/// True iff the edges of the closed walk pairwise do not cross.
bool is_jordan_cycle(const Arrangement& arr, std::span<const VertexId> cycle);

/// Every k-cycle whose edges pairwise do not cross, each listed once: it
/// starts at its smallest vertex and its second vertex is below its last.
std::vector<std::vector<VertexId>> jordan_cycles(const Arrangement& arr, int k);

/// Vertices not on the cycle that lie inside it (odd linking number).
std::vector<VertexId> vertices_inside(const TopoDrawing& d, std::span<const VertexId> cycle);

/// clockwise_labels and outer_vertices on an existing arrangement.
std::vector<VertexId> clockwise_labels(const Arrangement& arr, VertexId v0);
std::vector<VertexId> outer_vertices(const Arrangement& arr);

/// Polylines of the edges along a closed vertex walk.
std::vector<const Polyline*> cycle_curves(const TopoDrawing& d, std::span<const VertexId> cycle);

/// Closed ring of points traced by a vertex cycle (last point not repeated).
Polyline cycle_ring(const TopoDrawing& d, std::span<const VertexId> cycle);

} // namespace topoface
