#include "topoface/plane_subgraph.hpp"

#include "topoface/errors.hpp"

#include <algorithm>
#include <numeric>

namespace topoface {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Half-edge of the arrangement leaving u along edge e.
HalfEdgeId leaving(const Arrangement& arr, VertexId u, EdgeId e) {
    if (arr.drawing().endpoints(e).first == u) return 2 * arr.edge_arc_begin(e);
    return 2 * (arr.edge_arc_end(e) - 1) + 1;
}

} // namespace

PlaneSubgraph::PlaneSubgraph(const Arrangement& arr, std::vector<EdgeId> edges) : arr_(&arr), edges_(std::move(edges)) {
    const TopoDrawing& d = arr.drawing();
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    member_.assign(d.edge_count(), 0);
    degree_.assign(d.n(), 0);
    for (EdgeId e : edges_) {
        member_.at(e) = 1;
        ++degree_[d.endpoints(e).first];
        ++degree_[d.endpoints(e).second];
    }
    for (EdgeId e : edges_) {
        for (EdgeId f : arr.crossing_partners(e)) {
            if (member_[f]) {
                throw NotPlaneError("edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
            }
        }
    }

    // Faces are classes of cells glued across arcs of edges outside the subgraph.
    DisjointSets sets(arr.cell_count());
    for (ArcId a = 0; a < arr.arc_count(); ++a) {
        if (!member_[arr.arc_edge(a)]) sets.unite(arr.cell_of(2 * a), arr.cell_of(2 * a + 1));
    }
    std::vector<int> face_of_root(arr.cell_count(), -1);
    face_of_cell_.assign(arr.cell_count(), -1);
    for (CellId c = 0; c < arr.cell_count(); ++c) {
        const int root = sets.find(c);
        if (face_of_root[root] < 0) {
            face_of_root[root] = static_cast<int>(faces_.size());
            faces_.emplace_back();
            faces_.back().id = face_of_root[root];
        }
        face_of_cell_[c] = face_of_root[root];
        faces_[face_of_cell_[c]].cells.push_back(c);
    }
    outer_ = face_of_cell_[arr.outer_cell()];
    faces_[outer_].outer = true;

    for (VertexId v = 0; v < d.n(); ++v) {
        if (degree_[v] == 0) faces_[face_of_cell_[arr.cells_at_vertex(v).front()]].interior.push_back(v);
    }

    // Boundary walks: leave u along e, then at the far end w continue with the
    // subgraph edge clockwise next to e.
    corners_.assign(2 * edges_.size(), Corner{});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        for (int side = 0; side < 2; ++side) {
            const EdgeId e0 = edges_[k];
            const VertexId u0 = side == 0 ? d.endpoints(e0).first : d.endpoints(e0).second;
            if (corners_[directed_index(u0, e0)].face >= 0) continue;
            const int f = face_of_cell_[arr.cell_of(leaving(arr, u0, e0))];
            auto& walks = faces_[f].walks;
            const int w = static_cast<int>(walks.size());
            walks.emplace_back();
            VertexId u = u0;
            EdgeId e = e0;
            do {
                corners_[directed_index(u, e)] = {f, w, static_cast<int>(walks[w].size())};
                walks[w].push_back({u, e});
                const VertexId t = d.other_end(e, u);
                const auto rot = rotation(t);
                const auto pos = std::find(rot.begin(), rot.end(), e) - rot.begin();
                const auto cnt = static_cast<std::ptrdiff_t>(rot.size());
                e = rot[(pos + cnt - 1) % cnt];
                u = t;
            } while (!(u == u0 && e == e0));
            faces_[f].size += static_cast<int>(walks[w].size());
        }
    }
}

int PlaneSubgraph::directed_index(VertexId u, EdgeId e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw PreconditionError("edge " + std::to_string(e) + " is not in the subgraph");
    const auto k = static_cast<int>(it - edges_.begin());
    return 2 * k + (drawing().endpoints(e).first == u ? 0 : 1);
}

int PlaneSubgraph::face_of_isolated(VertexId v) const {
    if (degree_.at(v) != 0) throw PreconditionError("vertex " + std::to_string(v) + " is not isolated");
    return face_of_cell_[arr_->cells_at_vertex(v).front()];
}

std::vector<EdgeId> PlaneSubgraph::rotation(VertexId v) const {
    std::vector<EdgeId> out;
    for (HalfEdgeId h : arr_->vertex_rotation(v)) {
        const EdgeId e = arr_->arc_edge(h >> 1);
        if (member_[e]) out.push_back(e);
    }
    return out;
}

Corner PlaneSubgraph::corner_of(VertexId u, EdgeId g) const {
    if (degree_.at(u) == 0) throw PreconditionError("vertex " + std::to_string(u) + " is isolated");
    const auto rot = arr_->vertex_rotation(u);
    const auto k = static_cast<std::ptrdiff_t>(rot.size());
    const HalfEdgeId hg = leaving(*arr_, u, g);
    const auto pos = std::find(rot.begin(), rot.end(), hg) - rot.begin();
    for (std::ptrdiff_t step = 1; step <= k; ++step) {
        const EdgeId e = arr_->arc_edge(rot[(pos - step + k * 2) % k] >> 1);
        if (member_[e]) return corners_[directed_index(u, e)];
    }
    throw InvariantViolation("no subgraph edge at vertex " + std::to_string(u));
}

Corner PlaneSubgraph::step_corner(VertexId u, EdgeId e) const { return corners_[directed_index(u, e)]; }

PlaneSubgraph faces_of(const Arrangement& arr, std::vector<EdgeId> edges) { return PlaneSubgraph(arr, std::move(edges)); }

int boundary_distance(const SubgraphFace& face, VertexId u, VertexId v) {
    int best = -1;
    for (const auto& walk : face.walks) {
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            if (walk[i].vertex != u) continue;
            for (int j = 0; j < len; ++j) {
                if (walk[j].vertex != v) continue;
                const int dist = std::min(std::abs(i - j), len - std::abs(i - j));
                if (best < 0 || dist < best) best = dist;
            }
        }
    }
    if (best < 0) throw NotOnBoundaryError("vertices are not on a common boundary walk of the face");
    return best;
}

int corner_distance(const PlaneSubgraph& h, const Corner& a, const Corner& b) {
    if (a.face != b.face || a.walk != b.walk) throw NotOnBoundaryError("corners lie on different boundary walks");
    const int len = static_cast<int>(h.face(a.face).walks[a.walk].size());
    const int diff = std::abs(a.index - b.index);
    return std::min(diff, len - diff);
}

} // namespace topoface
