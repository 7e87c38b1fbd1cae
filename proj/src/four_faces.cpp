#include "topoface/facefinder.hpp"

#include "topoface/errors.hpp"

#include <algorithm>

namespace topoface {

std::array<VertexId, 4> canonical_cycle(std::array<VertexId, 4> cycle) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    if (cycle[1] > cycle[3]) std::swap(cycle[1], cycle[3]);
    return cycle;
}

FourFace make_four_face(const Arrangement& arr, const std::array<VertexId, 4>& cycle) {
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("a 4-cycle needs four distinct vertices");
    }
    FourFace f;
    f.cycle = cycle;
    f.cells = cells_inside_cycle(arr, cycle, CycleMode::jordan);
    f.area = abs(signed_area(cycle_ring(arr.drawing(), cycle)));
    return f;
}

bool revalidate(const Arrangement& arr, const FourFace& f) {
    if (!is_jordan_cycle(arr, f.cycle)) return false;
    if (f.cells.empty() || f.cells != cells_inside_cycle(arr, f.cycle)) return false;
    return sgn(f.area) > 0 && f.area == abs(signed_area(cycle_ring(arr.drawing(), f.cycle)));
}

Triangle make_triangle(const Arrangement& arr, VertexId a, VertexId b, VertexId c) {
    Triangle t;
    t.vertices = {a, b, c};
    t.cells = cells_inside_cycle(arr, t.vertices, CycleMode::jordan);
    t.empty = vertices_inside(arr.drawing(), t.vertices).empty();
    return t;
}

std::vector<EdgeId> inner_edges(const PlaneSubgraph& h, VertexId v, InnerNeed need) {
    const TopoDrawing& d = h.drawing();
    const Arrangement& arr = h.arrangement();
    int face = -1;
    if (need == InnerNeed::two) {
        if (h.degree(v) != 0) throw PreconditionError("vertex " + std::to_string(v) + " is in the subgraph");
        face = h.face_of_isolated(v);
    } else {
        if (h.degree(v) != 1) throw PreconditionError("vertex " + std::to_string(v) + " does not have degree one");
        face = h.step_corner(v, h.rotation(v).front()).face;
    }
    std::vector<EdgeId> out;
    for (VertexId u = 0; u < d.n(); ++u) {
        if (u == v || h.degree(u) == 0) continue;
        const EdgeId e = d.edge_id(u, v);
        if (h.contains(e)) continue;
        const auto partners = arr.crossing_partners(e);
        if (std::any_of(partners.begin(), partners.end(), [&](EdgeId f) { return h.contains(f); })) continue;
        if (h.corner_of(u, e).face != face) continue;
        out.push_back(e);
    }
    if (static_cast<int>(out.size()) < static_cast<int>(need)) {
        std::string msg = "vertex " + std::to_string(v) + " has " + std::to_string(out.size()) +
                          " uncrossed edges to the boundary of its face, expected " +
                          std::to_string(static_cast<int>(need)) + "; subgraph edges:";
        for (EdgeId e : h.edges()) {
            msg += " " + std::to_string(d.endpoints(e).first) + "-" + std::to_string(d.endpoints(e).second);
        }
        throw LemmaViolation(msg);
    }
    return out;
}

FourFace four_face_in_triangle(const Arrangement& arr, const Triangle& t, VertexId w) {
    auto v = t.vertices;
    std::sort(v.begin(), v.end());
    // w takes the place of one triangle edge.
    const std::array<std::array<VertexId, 4>, 3> candidates{{
        {v[0], w, v[1], v[2]},
        {v[0], w, v[2], v[1]},
        {v[1], w, v[2], v[0]},
    }};
    for (const auto& cycle : candidates) {
        if (!is_jordan_cycle(arr, cycle)) continue;
        FourFace f = make_four_face(arr, cycle);
        if (!f.cells.empty() && std::includes(t.cells.begin(), t.cells.end(), f.cells.begin(), f.cells.end())) {
            return f;
        }
    }
    throw LemmaViolation("no 4-cycle on triangle " + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                         std::to_string(v[2]) + " and vertex " + std::to_string(w) + " lies inside the triangle");
}

FourFace four_face_from_adjacent_triangles(const PlaneSubgraph& h, VertexId v0, VertexId vi, VertexId vj,
                                           VertexId vk) {
    const TopoDrawing& d = h.drawing();
    const auto name = [&] {
        return std::to_string(v0) + ":" + std::to_string(vi) + "," + std::to_string(vj) + "," + std::to_string(vk);
    };
    for (auto [a, b] : {std::pair{v0, vi}, {v0, vj}, {v0, vk}, {vi, vj}, {vj, vk}}) {
        if (a == b || !h.contains(a, b)) throw NotAdjacentError("triangles " + name() + " are not in the subgraph");
    }
    // Clockwise order is the counterclockwise rotation read backwards.
    const auto rot = h.rotation(v0);
    const auto k = static_cast<std::ptrdiff_t>(rot.size());
    const auto pos = std::find(rot.begin(), rot.end(), d.edge_id(v0, vi)) - rot.begin();
    if (k < 3 || rot[(pos - 1 + k) % k] != d.edge_id(v0, vj) || rot[(pos - 2 + k) % k] != d.edge_id(v0, vk)) {
        throw NotAdjacentError("spokes of " + name() + " are not consecutive clockwise");
    }
    const Arrangement& arr = h.arrangement();
    FourFace f = make_four_face(arr, {v0, vi, vj, vk});
    CellSet joined = make_triangle(arr, v0, vi, vj).cells;
    const CellSet second = make_triangle(arr, v0, vj, vk).cells;
    joined.insert(joined.end(), second.begin(), second.end());
    std::sort(joined.begin(), joined.end());
    if (std::adjacent_find(joined.begin(), joined.end()) != joined.end() || joined != f.cells) {
        throw NotAdjacentError("triangles " + name() + " do not bound a common 4-face");
    }
    return f;
}

bool verify_disjoint(const std::vector<FourFace>& faces) {
    CellId top = -1;
    for (const auto& f : faces) {
        if (!f.cells.empty()) top = std::max(top, f.cells.back());
    }
    std::vector<char> used(static_cast<std::size_t>(top + 1), 0);
    for (const auto& f : faces) {
        for (CellId c : f.cells) {
            if (used[c]) return false;
            used[c] = 1;
        }
    }
    return true;
}

} // namespace topoface
