#pragma once

#include "topoface/arrangement.hpp"
#include "topoface/plane_subgraph.hpp"

#include <json.hpp>

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace topoface {

/// The inside of a non-self-intersecting 4-cycle.
struct FourFace {
    std::array<VertexId, 4> cycle{};
    CellSet cells;
    Scalar area;
};

struct Triangle {
    std::array<VertexId, 3> vertices{};
    CellSet cells;
    bool empty = true;
};

/// Rotates and reflects a cycle so it starts at its smallest vertex and its
/// second vertex is below its last.
std::array<VertexId, 4> canonical_cycle(std::array<VertexId, 4> cycle);

/// Throws NotJordanError if two cycle edges cross, PreconditionError if a
/// vertex repeats.
FourFace make_four_face(const Arrangement& arr, const std::array<VertexId, 4>& cycle);

/// Recomputes crossings, cells and area of f.
bool revalidate(const Arrangement& arr, const FourFace& f);

Triangle make_triangle(const Arrangement& arr, VertexId a, VertexId b, VertexId c);

enum class InnerNeed { one = 1, two = 2 };

/// Edges vu of the drawing that cross no edge of H, with u on the boundary of
/// the face of H around v. v must be isolated (need two) or have degree one
/// (need one). Throws LemmaViolation if fewer than `need` exist.
std::vector<EdgeId> inner_edges(const PlaneSubgraph& h, VertexId v, InnerNeed need);

/// A 4-face on V(T) and w inside T. Throws LemmaViolation if none of the three
/// candidate 4-cycles is non-crossing and inside T.
FourFace four_face_in_triangle(const Arrangement& arr, const Triangle& t, VertexId w);

/// What four_face_in_face did, for tests and traces.
struct KeyTrace {
    int max_depth = 0;
    std::vector<std::string> steps;
};

/// A 4-face inside face f of H, where H is connected with minimum degree two
/// and f has size k >= 5 and at least 6(k - 4) vertices inside.
/// PreconditionError if those conditions fail, LemmaViolation if the drawing
/// is not a complete simple drawing.
FourFace four_face_in_face(const PlaneSubgraph& h, int face, KeyTrace* trace = nullptr);

/// The 4-face (v0, vi, vj, vk) formed by the triangles {v0, vi, vj} and
/// {v0, vj, vk} of H whose spokes v0vi, v0vj, v0vk are consecutive clockwise.
/// Throws NotAdjacentError otherwise.
FourFace four_face_from_adjacent_triangles(const PlaneSubgraph& h, VertexId v0, VertexId vi, VertexId vj,
                                           VertexId vk);

/// True iff no two faces share a cell.
bool verify_disjoint(const std::vector<FourFace>& faces);

struct PlaneStep {
    int iteration = 0;
    int block = -1;
    std::string branch;
    std::vector<EdgeId> added;
    std::vector<EdgeId> removed;
};

/// State of the iterative plane subgraph construction around an outer vertex v0.
struct PipelineState {
    const Arrangement* arr = nullptr;
    VertexId v0 = 0;
    std::vector<VertexId> labels;             // labels[0] = v0, then clockwise around v0
    std::vector<int> label_of;                // inverse of labels
    std::vector<std::vector<int>> blocks;     // label indices, five per block, last one shorter
    std::vector<EdgeId> edges;                // current subgraph
    int iteration = 0;
    std::vector<PlaneStep> steps;

    PlaneSubgraph subgraph() const { return PlaneSubgraph(*arr, edges); }
    VertexId vertex(int label) const { return labels.at(label); }
};

struct PlaneOptions {
    int iterations = -1;    // -1 runs max(floor(n / 12), 1) iterations
    bool check_properties = true;
};

/// Iterates from the spanning star at v0, adding at least one label edge per
/// step. Throws NotOuterVertexError if v0 is not on the outer cell and
/// InvariantViolation if a property check fails.
PipelineState build_plane_subgraph(const Arrangement& arr, VertexId v0, const PlaneOptions& options = {});

/// Checks the four invariants of the construction; returns the failures.
std::vector<std::string> plane_property_failures(const PipelineState& state);

struct IntervalEdge {
    int left = 0; // label
    int right = 0;
    EdgeId edge = 0;
    bool operator==(const IntervalEdge&) const = default;
};

/// Maximal greedy matching over edges of H between labels, in label order.
std::vector<IntervalEdge> greedy_matching(const PipelineState& state);

struct LaminarSplit {
    bool chain = false;
    std::vector<IntervalEdge> items; // chain from outermost in, antichain left to right
    int depth = 0;
    int width = 0;
};

/// Deepest chain if it is at least as long as the widest level, else that level.
/// Throws InvariantViolation if two intervals cross.
LaminarSplit laminar_decompose(std::vector<IntervalEdge> matching);

/// The three branches on their own, each with its own disjointness filter.
/// Quadrilaterals over consecutive common neighbours of v0 and hub.
std::vector<FourFace> k2m_faces(const PipelineState& state, VertexId hub, nlohmann::json* trace = nullptr);
/// One face per antichain interval: inside its triangle, or from an adjacent triangle.
std::vector<FourFace> antichain_faces(const PipelineState& state, const std::vector<IntervalEdge>& items,
                                      nlohmann::json* trace = nullptr);
/// One face per 6-edge face between chain anchors holding at least 12 vertices.
std::vector<FourFace> chain_faces(const PipelineState& state, const std::vector<IntervalEdge>& items,
                                  nlohmann::json* trace = nullptr);

struct PipelineResult {
    std::shared_ptr<const Arrangement> arrangement; // cells of the faces refer to it
    bool reprojected = false;
    std::vector<FourFace> faces;
    nlohmann::json trace;
};

/// Pairwise disjoint 4-faces of a valid simple complete drawing. When `trace`
/// is given it is filled as the run progresses, so it survives exceptions.
PipelineResult extract_disjoint_four_faces(const TopoDrawing& d, nlohmann::json* trace = nullptr);

/// Every 4-face of d. TooLargeError for n > 8.
std::vector<FourFace> brute_force_four_faces(const Arrangement& arr);
/// Size of a largest pairwise disjoint family of 4-faces. TooLargeError for n > 8.
int brute_force_max_disjoint(const Arrangement& arr);

struct HeilbronnResult {
    Scalar area;
    std::vector<VertexId> cycle;
    bool exact = true; // false when only the pipeline's faces were searched
};

/// Smallest area of a k-face, k in {3, 4}. Exact for triangles and for n <= 8;
/// otherwise an upper bound from the pipeline. PreconditionError if d has no
/// k-face.
HeilbronnResult heilbronn_min_area(const TopoDrawing& d, int k);

} // namespace topoface
