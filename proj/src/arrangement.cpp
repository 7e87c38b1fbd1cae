#include "topoface/arrangement.hpp"

#include "intersections.hpp"
#include "topoface/errors.hpp"

#include <algorithm>
#include <deque>

namespace topoface {

namespace {

Point departure(const TopoDrawing& d, EdgeId e, VertexId v) {
    const auto& pl = d.edge(e);
    if (d.endpoints(e).first == v) return pl[1] - pl[0];
    return pl[pl.size() - 2] - pl.back();
}

} // namespace

Arrangement::Arrangement(TopoDrawing d) : drawing_(std::move(d)), n_(drawing_.n()) {
    const int e_count = drawing_.edge_count();
    {
        const auto scan = detail::scan_intersections(drawing_, true);
        const std::size_t x_count = scan.crossings.size();
        crossings_.reserve(x_count);
        for (const auto& c : scan.crossings) {
            const auto& sa = scan.segments[c.seg_a];
            const auto& sb = scan.segments[c.seg_b];
            crossings_.push_back({sa.edge, sa.index, sb.edge, sb.index});
        }

        // Arcs in order along every edge; slot[4c..4c+3] holds the arcs of
        // edge a entering and leaving crossing c, then those of edge b.
        std::vector<ArcId> slot(4 * x_count);
        arcs_.reserve(static_cast<std::size_t>(e_count) + 2 * x_count);
        edge_arc_offset_.resize(e_count + 1);
        partner_offset_.resize(e_count + 1);
        partners_.reserve(2 * x_count);
        for (EdgeId e = 0; e < e_count; ++e) {
            edge_arc_offset_[e] = static_cast<ArcId>(arcs_.size());
            partner_offset_[e] = static_cast<int>(partners_.size());
            const auto [u, v] = drawing_.endpoints(e);
            NodeId cur = u;
            int cur_seg = 0;
            const auto first = scan.edge_first_segment[e];
            const auto last = scan.edge_first_segment[e + 1];
            for (auto g = first; g < last; ++g) {
                const int local = static_cast<int>(g - first);
                for (auto k = scan.order_offset[g]; k < scan.order_offset[g + 1]; ++k) {
                    const std::uint32_t c = scan.order[k];
                    const NodeId node = n_ + static_cast<NodeId>(c);
                    const auto id = static_cast<ArcId>(arcs_.size());
                    arcs_.push_back({e, cur, node, cur_seg, local});
                    const bool is_a = crossings_[c].edge_a == e;
                    slot[4 * c + (is_a ? 0 : 2)] = id;
                    slot[4 * c + (is_a ? 1 : 3)] = id + 1;
                    partners_.push_back(is_a ? crossings_[c].edge_b : crossings_[c].edge_a);
                    cur = node;
                    cur_seg = local;
                }
            }
            arcs_.push_back({e, cur, v, cur_seg, static_cast<int>(last - first) - 1});
        }
        edge_arc_offset_[e_count] = static_cast<ArcId>(arcs_.size());
        partner_offset_[e_count] = static_cast<int>(partners_.size());

        // Clockwise neighbor of every outgoing half-edge around its origin,
        // stored in next_ and turned into the successor map below.
        next_.assign(2 * arcs_.size(), -1);
        for (std::size_t c = 0; c < x_count; ++c) {
            const HalfEdgeId a_out = 2 * slot[4 * c + 1];
            const HalfEdgeId a_back = 2 * slot[4 * c] + 1;
            const HalfEdgeId b_out = 2 * slot[4 * c + 3];
            const HalfEdgeId b_back = 2 * slot[4 * c + 2] + 1;
            HalfEdgeId ccw[4];
            if (scan.crossings[c].turn > 0) {
                ccw[0] = a_out, ccw[1] = b_out, ccw[2] = a_back, ccw[3] = b_back;
            } else {
                ccw[0] = a_out, ccw[1] = b_back, ccw[2] = a_back, ccw[3] = b_out;
            }
            for (int i = 0; i < 4; ++i) next_[ccw[i]] = ccw[(i + 3) % 4];
        }
    }

    rotation_offset_.assign(n_ + 1, 0);
    rotation_.reserve(static_cast<std::size_t>(n_) * (n_ - 1));
    for (VertexId v = 0; v < n_; ++v) {
        rotation_offset_[v] = static_cast<int>(rotation_.size());
        std::vector<std::pair<Point, HalfEdgeId>> out;
        for (VertexId u = 0; u < n_; ++u) {
            if (u == v) continue;
            const EdgeId e = drawing_.edge_id(u, v);
            const HalfEdgeId h = drawing_.endpoints(e).first == v ? 2 * edge_arc_offset_[e]
                                                                   : 2 * (edge_arc_offset_[e + 1] - 1) + 1;
            out.emplace_back(departure(drawing_, e, v), h);
        }
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            if (!angle_less(out[i].first, out[i + 1].first)) {
                throw DegeneracyError("two edges leave vertex " + std::to_string(v) + " in the same direction");
            }
        }
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k; ++i) {
            rotation_.push_back(out[i].second);
            next_[out[i].second] = out[(i + k - 1) % k].second;
        }
    }
    rotation_offset_[n_] = static_cast<int>(rotation_.size());

    for (std::size_t a = 0; a < arcs_.size(); ++a) std::swap(next_[2 * a], next_[2 * a + 1]);

    cell_of_.assign(next_.size(), -1);
    for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(next_.size()); ++h) {
        if (cell_of_[h] >= 0) continue;
        const auto id = static_cast<CellId>(cell_first_.size());
        cell_first_.push_back(h);
        HalfEdgeId g = h;
        do {
            cell_of_[g] = id;
            g = next_[g];
        } while (g != h);
    }
    if (cell_first_.empty()) cell_first_.push_back(-1); // a lone vertex

    if (node_count() - arc_count() + cell_count() != 2) {
        throw InvariantViolation("Euler formula fails: V=" + std::to_string(node_count()) +
                                 " E=" + std::to_string(arc_count()) + " F=" + std::to_string(cell_count()));
    }

    // The lexicographically smallest curve point is a vertex or a bend; the
    // unbounded cell is the wedge there that contains the direction (-1, 0).
    if (e_count == 0) {
        outer_ = 0;
        return;
    }
    EdgeId best_e = 0;
    std::size_t best_k = 0;
    for (EdgeId e = 0; e < e_count; ++e) {
        const auto& pl = drawing_.edge(e);
        for (std::size_t k = 0; k < pl.size(); ++k) {
            if (lex_less(pl[k], drawing_.edge(best_e)[best_k])) best_e = e, best_k = k;
        }
    }
    const auto& pl = drawing_.edge(best_e);
    if (best_k == 0 || best_k + 1 == pl.size()) {
        const VertexId v = best_k == 0 ? drawing_.endpoints(best_e).first : drawing_.endpoints(best_e).second;
        outer_ = cell_of_[rotation_[rotation_offset_[v + 1] - 1]];
    } else {
        ArcId a = edge_arc_offset_[best_e];
        while (!(arcs_[a].seg_first < static_cast<int>(best_k) && static_cast<int>(best_k) <= arcs_[a].seg_last)) ++a;
        const Point pa = pl[best_k - 1] - pl[best_k];
        const Point pb = pl[best_k + 1] - pl[best_k];
        outer_ = angle_less(pa, pb) ? cell_of_[2 * a] : cell_of_[2 * a + 1];
    }
}

Point Arrangement::node_point(NodeId v) const {
    if (v < n_) return drawing_.vertex(v);
    const auto& c = crossings_[v - n_];
    const auto& pa = drawing_.edge(c.edge_a);
    const auto& pb = drawing_.edge(c.edge_b);
    return detail::crossing_point(pa[c.seg_a], pa[c.seg_a + 1], pb[c.seg_b], pb[c.seg_b + 1]);
}

Polyline Arrangement::arc_polyline(ArcId a) const {
    const Arc& arc = arcs_[a];
    const auto& pl = drawing_.edge(arc.edge);
    Polyline out;
    out.push_back(node_point(arc.from));
    for (int k = arc.seg_first + 1; k <= arc.seg_last; ++k) out.push_back(pl[k]);
    out.push_back(node_point(arc.to));
    return out;
}

Polyline Arrangement::half_edge_polyline(HalfEdgeId h) const {
    Polyline out = arc_polyline(h >> 1);
    if (h & 1) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<HalfEdgeId> Arrangement::cell_boundary(CellId c) const {
    std::vector<HalfEdgeId> out;
    const HalfEdgeId start = cell_first_.at(c);
    if (start < 0) return out;
    HalfEdgeId h = start;
    do {
        out.push_back(h);
        h = next_[h];
    } while (h != start);
    return out;
}

Polyline Arrangement::cell_ring(CellId c) const {
    Polyline ring;
    for (HalfEdgeId h : cell_boundary(c)) {
        Polyline piece = half_edge_polyline(h);
        ring.insert(ring.end(), piece.begin(), piece.end() - 1);
    }
    return ring;
}

Scalar Arrangement::cell_area(CellId c) const {
    if (c == outer_) throw PreconditionError("the unbounded cell has no finite area");
    const Polyline ring = cell_ring(c);
    Scalar area = signed_area(ring);
    if (sgn(area) <= 0) throw InvariantViolation("bounded cell " + std::to_string(c) + " has non-positive area");
    return area;
}

Point Arrangement::cell_point(CellId c) const {
    if (c == outer_) {
        Point low = drawing_.vertex(0);
        for (const auto& pl : drawing_.edges()) {
            for (const auto& p : pl) {
                if (lex_less(p, low)) low = p;
            }
        }
        return {low.x - 1, low.y};
    }
    // Step from the middle of a boundary piece along its inward normal, half
    // way to the nearest boundary point hit.
    const Polyline ring = cell_ring(c);
    const std::size_t m = ring.size();
    const Point& p = ring[0];
    const Point& q = ring[1];
    const Point mid = ratio(1, 2) * (p + q);
    const Point normal{-(q.y - p.y), q.x - p.x};
    bool found = false;
    Scalar best;
    for (std::size_t i = 1; i < m; ++i) {
        const Point& s = ring[i];
        const Point& t = ring[(i + 1) % m];
        const Point st = t - s;
        const Point sm = s - mid;
        const Scalar den = cross(normal, st);
        if (sgn(den) != 0) {
            const Scalar along = cross(sm, st) / den;
            const Scalar u = cross(sm, normal) / den;
            if (sgn(along) > 0 && sgn(u) >= 0 && u <= 1 && (!found || along < best)) best = along, found = true;
        } else if (sgn(cross(sm, normal)) == 0) {
            for (const Point* e : {&s, &t}) {
                const Scalar along = dot(*e - mid, normal) / dot(normal, normal);
                if (sgn(along) > 0 && (!found || along < best)) best = along, found = true;
            }
        }
    }
    if (!found) throw InvariantViolation("no boundary hit from inside cell " + std::to_string(c));
    return mid + Scalar(best / 2) * normal;
}

std::span<const HalfEdgeId> Arrangement::vertex_rotation(VertexId v) const {
    return {rotation_.data() + rotation_offset_.at(v), rotation_.data() + rotation_offset_.at(v + 1)};
}

std::vector<CellId> Arrangement::cells_at_vertex(VertexId v) const {
    std::vector<CellId> out;
    for (HalfEdgeId h : vertex_rotation(v)) out.push_back(cell_of_[h]);
    if (out.empty()) out.push_back(outer_);
    return out;
}

std::span<const EdgeId> Arrangement::crossing_partners(EdgeId e) const {
    return {partners_.data() + partner_offset_.at(e), partners_.data() + partner_offset_.at(e + 1)};
}

int Arrangement::crossings_between(EdgeId e, EdgeId f) const {
    const auto p = crossing_partners(e);
    return static_cast<int>(std::count(p.begin(), p.end(), f));
}

CellId Arrangement::locate(const Point& p) const {
    for (const auto& pl : drawing_.edges()) {
        for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
            if (orientation(pl[i], pl[i + 1], p) != 0) continue;
            if (sgn(dot(p - pl[i], p - pl[i + 1])) <= 0) throw OnBoundaryError("point lies on the drawing");
        }
    }
    for (CellId c = 0; c < cell_count(); ++c) {
        if (c == outer_) continue;
        Polyline ring = cell_ring(c);
        ring.push_back(ring.front());
        const Polyline* curve = &ring;
        if (ray_parity_auto(p, std::span<const Polyline* const>(&curve, 1))) return c;
    }
    return outer_;
}

std::vector<char> Arrangement::parity_fill(const std::vector<char>& edge_in_chain) const {
    std::vector<char> flag(cell_count(), -1);
    flag[outer_] = 0;
    std::deque<CellId> queue{outer_};
    while (!queue.empty()) {
        const CellId c = queue.front();
        queue.pop_front();
        const HalfEdgeId start = cell_first_[c];
        if (start < 0) continue;
        HalfEdgeId h = start;
        do {
            const CellId other = cell_of_[h ^ 1];
            const char bit = static_cast<char>(flag[c] ^ (edge_in_chain[arcs_[h >> 1].edge] ? 1 : 0));
            if (flag[other] < 0) {
                flag[other] = bit;
                queue.push_back(other);
            } else if (flag[other] != bit) {
                throw PreconditionError("edge chain has a nonzero boundary");
            }
            h = next_[h];
        } while (h != start);
    }
    return flag;
}

Arrangement planarize(const TopoDrawing& d) { return Arrangement(d); }

namespace {

std::vector<EdgeId> walk_edges(const TopoDrawing& d, std::span<const VertexId> cycle) {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(d.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]));
    return out;
}

CellSet flagged(const std::vector<char>& flag) {
    CellSet out;
    for (CellId c = 0; c < static_cast<CellId>(flag.size()); ++c) {
        if (flag[c] == 1) out.push_back(c);
    }
    return out;
}

} // namespace

bool is_jordan_cycle(const Arrangement& arr, std::span<const VertexId> cycle) {
    if (cycle.size() < 3) return false;
    std::vector<VertexId> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const auto edges = walk_edges(arr.drawing(), cycle);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (arr.crossings_between(edges[i], edges[j]) != 0) return false;
        }
    }
    return true;
}

CellSet cells_inside_cycle(const Arrangement& arr, std::span<const VertexId> cycle, CycleMode mode) {
    if (mode == CycleMode::jordan && !is_jordan_cycle(arr, cycle)) {
        throw NotJordanError("cycle is not a simple closed curve");
    }
    std::vector<char> mask(arr.drawing().edge_count(), 0);
    for (EdgeId e : walk_edges(arr.drawing(), cycle)) mask[e] ^= 1;
    return flagged(arr.parity_fill(mask));
}

CellSet cells_inside_edges(const Arrangement& arr, std::span<const EdgeId> edges) {
    std::vector<char> mask(arr.drawing().edge_count(), 0);
    for (EdgeId e : edges) mask.at(e) ^= 1;
    return flagged(arr.parity_fill(mask));
}

std::vector<const Polyline*> cycle_curves(const TopoDrawing& d, std::span<const VertexId> cycle) {
    std::vector<const Polyline*> out;
    for (EdgeId e : walk_edges(d, cycle)) out.push_back(&d.edge(e));
    return out;
}

Polyline cycle_ring(const TopoDrawing& d, std::span<const VertexId> cycle) {
    Polyline ring;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const VertexId a = cycle[i];
        const VertexId b = cycle[(i + 1) % cycle.size()];
        const auto& pl = d.edge(a, b);
        if (a < b) {
            ring.insert(ring.end(), pl.begin(), pl.end() - 1);
        } else {
            ring.insert(ring.end(), pl.rbegin(), pl.rend() - 1);
        }
    }
    return ring;
}

std::vector<VertexId> vertices_inside(const TopoDrawing& d, std::span<const VertexId> cycle) {
    const auto curves = cycle_curves(d, cycle);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < d.n(); ++v) {
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
        if (ray_parity_auto(d.vertex(v), curves)) out.push_back(v);
    }
    return out;
}

std::vector<VertexId> outer_vertices(const Arrangement& arr) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < arr.vertex_count(); ++v) {
        const auto cells = arr.cells_at_vertex(v);
        if (std::find(cells.begin(), cells.end(), arr.outer_cell()) != cells.end()) out.push_back(v);
    }
    return out;
}

std::vector<VertexId> clockwise_labels(const Arrangement& arr, VertexId v0) {
    const auto rot = arr.vertex_rotation(v0);
    const auto k = static_cast<int>(rot.size());
    if (k == 0) return {};
    int start = -1;
    for (int i = 0; i < k && start < 0; ++i) {
        if (arr.cell_of(rot[i]) == arr.outer_cell()) start = i;
    }
    if (start < 0) throw NotOuterVertexError("vertex " + std::to_string(v0) + " does not touch the unbounded cell");
    // The outer wedge runs counterclockwise from rot[start]; walking clockwise
    // from inside it meets rot[start] first.
    std::vector<VertexId> labels;
    for (int i = 0; i < k; ++i) {
        const HalfEdgeId h = rot[(start - i + k) % k];
        labels.push_back(arr.drawing().other_end(arr.arc_edge(h >> 1), v0));
    }
    return labels;
}

} // namespace topoface

namespace topoface {

namespace {

void extend_cycles(const Arrangement& arr, int k, std::vector<VertexId>& path, std::vector<EdgeId>& edges,
                   std::vector<char>& used, std::vector<std::vector<VertexId>>& out) {
    const TopoDrawing& d = arr.drawing();
    auto compatible = [&](EdgeId e) {
        for (EdgeId f : edges) {
            if (arr.crossings_between(e, f) != 0) return false;
        }
        return true;
    };
    if (static_cast<int>(path.size()) == k) {
        if (path[1] > path.back()) return;
        const EdgeId closing = d.edge_id(path.back(), path.front());
        if (compatible(closing)) out.push_back(path);
        return;
    }
    for (VertexId v = path.front() + 1; v < d.n(); ++v) {
        if (used[v]) continue;
        const EdgeId e = d.edge_id(path.back(), v);
        if (!compatible(e)) continue;
        used[v] = 1;
        path.push_back(v);
        edges.push_back(e);
        extend_cycles(arr, k, path, edges, used, out);
        edges.pop_back();
        path.pop_back();
        used[v] = 0;
    }
}

} // namespace

std::vector<std::vector<VertexId>> jordan_cycles(const Arrangement& arr, int k) {
    std::vector<std::vector<VertexId>> out;
    const int n = arr.vertex_count();
    if (k < 3 || k > n) return out;
    std::vector<char> used(n, 0);
    for (VertexId s = 0; s + k <= n; ++s) {
        std::vector<VertexId> path{s};
        std::vector<EdgeId> edges;
        used[s] = 1;
        extend_cycles(arr, k, path, edges, used, out);
        used[s] = 0;
    }
    return out;
}

} // namespace topoface
