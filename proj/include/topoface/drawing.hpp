#pragma once

#include "topoface/geometry.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace topoface {

using VertexId = int;
using EdgeId = int;

/// Lexicographic index of the edge {u, v} of K_n.
constexpr EdgeId edge_index(int n, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Inverse of edge_index: the endpoints (u, v), u < v, of edge e of K_n.
constexpr std::pair<VertexId, VertexId> edge_endpoints(int n, EdgeId e) {
    VertexId u = 0;
    while (edge_index(n, u, n - 1) < e) ++u;
    return {u, e - edge_index(n, u, u + 1) + u + 1};
}

/// A drawing of the complete graph K_n: one point per vertex and one polyline
/// per edge, in lexicographic (u, v) order with u < v. Each polyline runs from
/// vertex u to vertex v. Immutable once built.
class TopoDrawing {
public:
    TopoDrawing() = default;

    /// Checks the structural contract (complete edge set, endpoints, no
    /// repeated consecutive points); throws InvalidDrawing otherwise.
    TopoDrawing(std::vector<Point> vertices, std::vector<Polyline> edges);

    int n() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Point& vertex(VertexId v) const { return vertices_.at(v); }
    const std::vector<Point>& vertices() const { return vertices_; }

    const Polyline& edge(EdgeId e) const { return edges_.at(e); }
    const Polyline& edge(VertexId u, VertexId v) const { return edges_.at(edge_id(u, v)); }
    const std::vector<Polyline>& edges() const { return edges_; }

    EdgeId edge_id(VertexId u, VertexId v) const;
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return ends_.at(e); }

    /// The endpoint of e that is not v.
    VertexId other_end(EdgeId e, VertexId v) const;

    friend bool operator==(const TopoDrawing& a, const TopoDrawing& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Point> vertices_;
    std::vector<Polyline> edges_;
    std::vector<std::pair<VertexId, VertexId>> ends_;
};

enum class ValidationMode { simple, generic };

enum class ViolationKind {
    self_intersection,    // an edge crosses or touches itself
    passes_through_vertex,
    touching,             // non-proper contact, including contact at a bend point
    overlap,
    concurrent_crossings, // two crossings at the same point
    multiple_crossings,   // simple mode: a pair meets twice or more
    adjacent_crossing,    // simple mode: edges sharing an endpoint also cross
};

std::string to_string(ViolationKind kind);

struct Violation {
    EdgeId edge_a = -1;
    EdgeId edge_b = -1; // -1 when the violation concerns a single edge
    ViolationKind kind;
    Point witness;
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::generic;
    std::vector<Violation> violations;
    std::int64_t crossing_count = 0;

    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const TopoDrawing& d, ValidationMode mode);

/// Edges incident to a vertex in clockwise order of departure direction.
struct Rotation {
    VertexId vertex = 0;
    std::vector<EdgeId> clockwise;
};

/// Throws DegeneracyError if two edges leave v in the same direction.
Rotation rotation_at(const TopoDrawing& d, VertexId v);

/// Neighbors v_1..v_{n-1} of v0 in clockwise order, starting right after the
/// unbounded cell. Throws NotOuterVertexError if v0 does not touch that cell.
std::vector<VertexId> clockwise_labels(const TopoDrawing& d, VertexId v0);

/// Vertices lying on the boundary of the unbounded cell, ascending.
std::vector<VertexId> outer_vertices(const TopoDrawing& d);

/// Same crossing edge pairs and same order of crossings along every edge.
bool weak_isomorphic(const TopoDrawing& a, const TopoDrawing& b);

struct ReprojectionOptions {
    int max_segments = 200000; // total polyline segment budget
    int max_rounds = 12;
};

/// Returns d when some vertex already touches the unbounded cell; otherwise
/// inverts the plane around a point next to vertex 0 and refines the image
/// until it is valid and weakly isomorphic to d.
TopoDrawing ensure_outer_vertex(const TopoDrawing& d, const ReprojectionOptions& options = {});

} // namespace topoface
