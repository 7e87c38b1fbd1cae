#include "topoface/facefinder.hpp"

#include "topoface/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace topoface {

namespace {

struct Spokes {
    VertexId u;
    std::vector<EdgeId> edges;
    std::vector<Corner> corners;
};

bool within(const CellSet& cells, const CellSet& region) {
    return !cells.empty() && std::includes(region.begin(), region.end(), cells.begin(), cells.end());
}

class KeySearch {
public:
    KeySearch(const Arrangement& arr, KeyTrace* trace) : arr_(arr), d_(arr.drawing()), trace_(trace) {}

    FourFace run(const PlaneSubgraph& h, int face, int depth);

private:
    void note(const std::string& step, int depth) {
        if (!trace_) return;
        trace_->max_depth = std::max(trace_->max_depth, depth);
        trace_->steps.push_back(step);
    }

    // The cycle through u and the boundary path of length two between corners.
    static std::array<VertexId, 4> corner_cycle(const std::vector<WalkStep>& walk, VertexId u, const Corner& c1,
                                                const Corner& c2) {
        const int k = static_cast<int>(walk.size());
        const int mid = (c1.index + 2) % k == c2.index ? (c1.index + 1) % k : (c2.index + 1) % k;
        return {u, walk[c1.index].vertex, walk[mid].vertex, walk[c2.index].vertex};
    }

    std::optional<FourFace> contained(const std::array<VertexId, 4>& cycle, const CellSet& region) const {
        auto sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
        if (!is_jordan_cycle(arr_, cycle)) return std::nullopt;
        FourFace f = make_four_face(arr_, cycle);
        if (!within(f.cells, region)) return std::nullopt;
        return f;
    }

    FourFace split(const PlaneSubgraph& h, int face, VertexId u, EdgeId g1, EdgeId g2, int depth);
    FourFace pigeonhole(const PlaneSubgraph& h, int face, const Spokes& s1, const Spokes& s2, int p, int q,
                        int depth);

    const Arrangement& arr_;
    const TopoDrawing& d_;
    KeyTrace* trace_;
};

FourFace KeySearch::run(const PlaneSubgraph& h, int face, int depth) {
    const SubgraphFace& f = h.face(face);
    if (f.walks.size() != 1) throw PreconditionError("face boundary is not a single closed walk");
    const auto& walk = f.walks.front();
    const int k = f.size;
    if (k < 5) throw PreconditionError("face size " + std::to_string(k) + " is below 5");
    for (const auto& step : walk) {
        if (h.degree(step.vertex) < 2) throw PreconditionError("subgraph has a vertex of degree one");
    }
    const int need = 6 * (k - 4);
    if (static_cast<int>(f.interior.size()) < need) {
        throw PreconditionError("face of size " + std::to_string(k) + " holds " + std::to_string(f.interior.size()) +
                                " vertices, needs " + std::to_string(need));
    }
    note("enter k=" + std::to_string(k) + " depth=" + std::to_string(depth), depth);

    std::vector<Spokes> all;
    for (VertexId u : f.interior) {
        // The two edges with the lowest far endpoints stand in for the lemma's pair.
        Spokes s{u, inner_edges(h, u, InnerNeed::two), {}};
        s.edges.resize(2);
        for (EdgeId e : s.edges) s.corners.push_back(h.corner_of(d_.other_end(e, u), e));
        all.push_back(std::move(s));
    }

    for (const auto& s : all) {
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < s.edges.size(); ++j) {
                if (corner_distance(h, s.corners[i], s.corners[j]) != 2) continue;
                if (auto found = contained(corner_cycle(walk, s.u, s.corners[i], s.corners[j]), f.cells)) {
                    note("case1 u=" + std::to_string(s.u), depth);
                    return *found;
                }
            }
        }
    }

    for (const auto& s : all) {
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < s.edges.size(); ++j) {
                if (corner_distance(h, s.corners[i], s.corners[j]) < 3) continue;
                note("case2 u=" + std::to_string(s.u), depth);
                return split(h, face, s.u, s.edges[i], s.edges[j], depth);
            }
        }
    }

    // Every vertex now reaches two consecutive corners.
    std::map<std::pair<int, int>, std::size_t> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& s = all[i];
        if (s.corners.size() != 2) continue;
        int p = s.corners[0].index;
        int q = s.corners[1].index;
        if ((q + 1) % k == p) std::swap(p, q);
        if ((p + 1) % k != q) continue;
        const auto [it, fresh] = seen.emplace(std::pair{p, q}, i);
        if (!fresh) {
            note("case3 u1=" + std::to_string(all[it->second].u) + " u2=" + std::to_string(s.u), depth);
            return pigeonhole(h, face, all[it->second], s, p, q, depth);
        }
    }
    throw LemmaViolation("no two interior vertices of a face of size " + std::to_string(k) +
                         " share a boundary pair");
}

FourFace KeySearch::split(const PlaneSubgraph& h, int face, VertexId u, EdgeId g1, EdgeId g2, int depth) {
    std::vector<EdgeId> edges = h.edges();
    edges.push_back(g1);
    edges.push_back(g2);
    std::optional<PlaneSubgraph> h2;
    try {
        h2.emplace(arr_, std::move(edges));
    } catch (const NotPlaneError& e) {
        throw LemmaViolation(std::string("split edges cross the subgraph: ") + e.what());
    }
    std::vector<int> parts;
    for (CellId c : h.face(face).cells) parts.push_back(h2->face_of_cell(c));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.size() != 2) throw InvariantViolation("two edges at vertex " + std::to_string(u) + " did not split the face");
    std::sort(parts.begin(), parts.end(), [&](int a, int b) { return h2->face(a).size < h2->face(b).size; });
    for (int part : parts) {
        const auto& sub = h2->face(part);
        if (sub.size >= 5 && static_cast<int>(sub.interior.size()) >= 6 * (sub.size - 4)) {
            note("split sizes " + std::to_string(h2->face(parts[0]).size) + "+" +
                     std::to_string(h2->face(parts[1]).size) + " into " + std::to_string(sub.size),
                 depth);
            return run(*h2, part, depth + 1);
        }
    }
    throw InvariantViolation("neither side of the split at vertex " + std::to_string(u) + " holds enough vertices");
}

FourFace KeySearch::pigeonhole(const PlaneSubgraph& h, int face, const Spokes& s1, const Spokes& s2, int p, int q,
                               int depth) {
    const SubgraphFace& f = h.face(face);
    const auto& walk = f.walks.front();
    const VertexId a = walk[p].vertex;
    const VertexId b = walk[q].vertex;
    VertexId u1 = s1.u;
    VertexId u2 = s2.u;
    const bool cross_1b_2a = arr_.crossings_between(d_.edge_id(u1, b), d_.edge_id(u2, a)) > 0;
    const bool cross_1a_2b = arr_.crossings_between(d_.edge_id(u1, a), d_.edge_id(u2, b)) > 0;

    if (!cross_1b_2a && !cross_1a_2b) {
        for (auto [apex, w] : {std::pair{u1, u2}, {u2, u1}}) {
            const auto inside = vertices_inside(d_, std::array<VertexId, 3>{apex, a, b});
            if (std::find(inside.begin(), inside.end(), w) == inside.end()) continue;
            FourFace found = four_face_in_triangle(arr_, make_triangle(arr_, apex, a, b), w);
            if (!within(found.cells, f.cells)) throw LemmaViolation("triangle 4-face leaves the face");
            note("case3 triangle apex=" + std::to_string(apex), depth);
            return found;
        }
        throw LemmaViolation("neither interior vertex lies in the other's triangle");
    }
    if (cross_1b_2a && cross_1a_2b) throw LemmaViolation("both pairs of spokes cross");
    if (cross_1a_2b) std::swap(u1, u2);

    // u1b crosses u2a; u2 has degree one in the enlarged subgraph.
    std::vector<EdgeId> edges = h.edges();
    edges.push_back(d_.edge_id(u1, a));
    edges.push_back(d_.edge_id(u1, b));
    edges.push_back(d_.edge_id(u2, b));
    std::optional<PlaneSubgraph> h1;
    try {
        h1.emplace(arr_, std::move(edges));
    } catch (const NotPlaneError& e) {
        throw LemmaViolation(std::string("spokes cross the subgraph: ") + e.what());
    }
    const Corner ca{face, 0, p};
    const Corner cb{face, 0, q};
    for (EdgeId e : inner_edges(*h1, u2, InnerNeed::one)) {
        const VertexId x = d_.other_end(e, u2);
        if (x == u1) {
            if (auto found = contained({u2, u1, a, b}, f.cells)) {
                note("case3 target u1", depth);
                return *found;
            }
            continue;
        }
        if (h.degree(x) == 0) continue;
        const Corner cx = h.corner_of(x, e);
        if (cx.face != face) continue;
        const int db = corner_distance(h, cb, cx);
        const int da = corner_distance(h, ca, cx);
        if (db == 2) {
            if (auto found = contained(corner_cycle(walk, u2, cb, cx), f.cells)) {
                note("case3 target near b", depth);
                return *found;
            }
        }
        if (da == 2) {
            if (auto found = contained(corner_cycle(walk, u2, ca, cx), f.cells)) {
                note("case3 target near a", depth);
                return *found;
            }
        }
        if (db >= 3) {
            note("case3 split at b", depth);
            return split(h, face, u2, d_.edge_id(u2, b), e, depth);
        }
        if (da >= 3) {
            note("case3 split at a", depth);
            return split(h, face, u2, d_.edge_id(u2, a), e, depth);
        }
    }
    throw LemmaViolation("degree-one vertex " + std::to_string(u2) + " has no usable edge");
}

} // namespace

FourFace four_face_in_face(const PlaneSubgraph& h, int face, KeyTrace* trace) {
    KeySearch search(h.arrangement(), trace);
    return search.run(h, face, 1);
}

} // namespace topoface
