#pragma once

#include "topoface/arrangement.hpp"

#include <vector>

namespace topoface {

/// One step of a face boundary walk: leave `vertex` along `edge`.
struct WalkStep {
    VertexId vertex;
    EdgeId edge;
};

struct SubgraphFace {
    int id = 0;
    bool outer = false;
    std::vector<std::vector<WalkStep>> walks; // face on the left of every step
    int size = 0;                             // total walk length; bridges count twice
    CellSet cells;
    std::vector<VertexId> interior;           // isolated vertices inside the face
};

/// Position of a corner on a face boundary.
struct Corner {
    int face = -1;
    int walk = -1;
    int index = -1;
};

/// A set of pairwise non-crossing edges of a drawing with its faces.
/// Keeps a reference to the arrangement, which must outlive it.
class PlaneSubgraph {
public:
    /// Throws NotPlaneError if two of the edges cross.
    PlaneSubgraph(const Arrangement& arr, std::vector<EdgeId> edges);

    const Arrangement& arrangement() const { return *arr_; }
    const TopoDrawing& drawing() const { return arr_->drawing(); }
    const std::vector<EdgeId>& edges() const { return edges_; } // ascending
    bool contains(EdgeId e) const { return member_[e] != 0; }
    bool contains(VertexId u, VertexId v) const { return contains(drawing().edge_id(u, v)); }
    int degree(VertexId v) const { return degree_[v]; }

    const std::vector<SubgraphFace>& faces() const { return faces_; }
    const SubgraphFace& face(int f) const { return faces_.at(f); }
    int outer_face() const { return outer_; }
    int face_of_cell(CellId c) const { return face_of_cell_[c]; }
    /// Face holding v: its interior face if v is isolated, else PreconditionError.
    int face_of_isolated(VertexId v) const;

    /// Subgraph edges at v, counterclockwise.
    std::vector<EdgeId> rotation(VertexId v) const;

    /// Corner at which an edge g of the drawing, not in the subgraph, meets
    /// the subgraph vertex u. PreconditionError if u is isolated.
    Corner corner_of(VertexId u, EdgeId g) const;
    /// Corner that starts the walk step leaving u along subgraph edge e.
    Corner step_corner(VertexId u, EdgeId e) const;
    const WalkStep& step(const Corner& c) const { return faces_[c.face].walks[c.walk][c.index]; }

private:
    int directed_index(VertexId u, EdgeId e) const;

    const Arrangement* arr_;
    std::vector<EdgeId> edges_;
    std::vector<char> member_;
    std::vector<int> degree_;
    std::vector<SubgraphFace> faces_;
    int outer_ = 0;
    std::vector<int> face_of_cell_;
    std::vector<Corner> corners_; // per directed edge, see directed_index
};

PlaneSubgraph faces_of(const Arrangement& arr, std::vector<EdgeId> edges);

/// Shortest walk length along the face boundary between u and v.
/// NotOnBoundaryError unless both lie on one boundary walk of the face.
int boundary_distance(const SubgraphFace& face, VertexId u, VertexId v);

/// Distance between two corners on the same walk.
int corner_distance(const PlaneSubgraph& h, const Corner& a, const Corner& b);

} // namespace topoface
