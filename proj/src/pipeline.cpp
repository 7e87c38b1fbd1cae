#include "topoface/facefinder.hpp"

#include "topoface/errors.hpp"

#include <algorithm>

namespace topoface {

using nlohmann::json;

std::vector<IntervalEdge> greedy_matching(const PipelineState& state) {
    const TopoDrawing& d = state.arr->drawing();
    std::vector<IntervalEdge> candidates;
    for (EdgeId e : state.edges) {
        const auto [a, b] = d.endpoints(e);
        if (a == state.v0 || b == state.v0) continue;
        const int la = state.label_of[a];
        const int lb = state.label_of[b];
        candidates.push_back({std::min(la, lb), std::max(la, lb), e});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const IntervalEdge& x, const IntervalEdge& y) { return std::pair{x.left, x.right} < std::pair{y.left, y.right}; });
    std::vector<char> used(d.n(), 0);
    std::vector<IntervalEdge> matching;
    for (const auto& c : candidates) {
        if (used[c.left] || used[c.right]) continue;
        used[c.left] = used[c.right] = 1;
        matching.push_back(c);
    }
    return matching;
}

namespace {

struct LaminarForest {
    std::vector<IntervalEdge> chain;
    std::vector<IntervalEdge> antichain;
};

LaminarForest laminar_forest(std::vector<IntervalEdge> m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const auto& a = m[i];
            const auto& b = m[j];
            const bool disjoint = a.right < b.left || b.right < a.left;
            const bool nested = (a.left < b.left && b.right < a.right) || (b.left < a.left && a.right < b.right);
            if (!disjoint && !nested) {
                throw InvariantViolation("intervals [" + std::to_string(a.left) + "," + std::to_string(a.right) +
                                         "] and [" + std::to_string(b.left) + "," + std::to_string(b.right) +
                                         "] cross");
            }
        }
    }
    std::sort(m.begin(), m.end(), [](const IntervalEdge& x, const IntervalEdge& y) {
        return x.left != y.left ? x.left < y.left : x.right > y.right;
    });
    std::vector<int> parent(m.size(), -1);
    std::vector<int> depth(m.size(), 0);
    std::vector<int> open;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        while (!open.empty() && m[open.back()].right < m[i].left) open.pop_back();
        parent[i] = open.empty() ? -1 : open.back();
        depth[i] = open.empty() ? 1 : depth[open.back()] + 1;
        open.push_back(i);
    }
    LaminarForest out;
    if (m.empty()) return out;
    const int deepest = static_cast<int>(std::max_element(depth.begin(), depth.end()) - depth.begin());
    for (int i = deepest; i >= 0; i = parent[i]) out.chain.push_back(m[i]);
    std::reverse(out.chain.begin(), out.chain.end());
    std::vector<int> width(depth[deepest] + 1, 0);
    for (int dep : depth) ++width[dep];
    const int level = static_cast<int>(std::max_element(width.begin(), width.end()) - width.begin());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (depth[i] == level) out.antichain.push_back(m[i]);
    }
    return out;
}

json edge_json(const TopoDrawing& d, EdgeId e) { return json::array({d.endpoints(e).first, d.endpoints(e).second}); }

json face_json(const FourFace& f, const std::string& source) {
    return {{"cycle", f.cycle}, {"area", format_scalar(f.area)}, {"cells", f.cells.size()}, {"source", source}};
}

class Collector {
public:
    Collector(const Arrangement& arr, json& trace) : used_(arr.cell_count(), 0), trace_(trace) {}

    void offer(FourFace f, const std::string& source) {
        const bool clash = std::any_of(f.cells.begin(), f.cells.end(), [&](CellId c) { return used_[c] != 0; });
        if (clash) {
            trace_["filtered"].push_back(face_json(f, source));
            return;
        }
        for (CellId c : f.cells) used_[c] = 1;
        trace_["faces"].push_back(face_json(f, source));
        faces.push_back(std::move(f));
    }

    std::vector<FourFace> faces;

private:
    std::vector<char> used_;
    json& trace_;
};

// Quadrilaterals (v0, w, hub, w') over consecutive common neighbours w, w'.
void k2m_branch(const PipelineState& s, const PlaneSubgraph& h, VertexId hub, Collector& out) {
    const TopoDrawing& d = s.arr->drawing();
    std::vector<int> common;
    for (EdgeId e : h.rotation(hub)) {
        const VertexId w = d.other_end(e, hub);
        if (w != s.v0 && h.contains(s.v0, w)) common.push_back(s.label_of[w]);
    }
    std::sort(common.begin(), common.end());
    for (std::size_t i = 0; i + 1 < common.size(); ++i) {
        out.offer(make_four_face(*s.arr, {s.v0, s.vertex(common[i]), hub, s.vertex(common[i + 1])}), "k2m");
    }
}

void antichain_branch(const PipelineState& s, const PlaneSubgraph& h, const std::vector<IntervalEdge>& items,
                      Collector& out, json& trace) {
    std::vector<int> spoked;
    for (int l = 1; l < static_cast<int>(s.labels.size()); ++l) {
        if (h.contains(s.v0, s.vertex(l))) spoked.push_back(l);
    }
    for (const auto& iv : items) {
        const VertexId x = s.vertex(iv.left);
        const VertexId y = s.vertex(iv.right);
        const Triangle t = make_triangle(*s.arr, s.v0, x, y);
        if (!t.empty) {
            const auto inside = vertices_inside(s.arr->drawing(), t.vertices);
            out.offer(four_face_in_triangle(*s.arr, t, inside.front()), "triangle");
            continue;
        }
        const auto at = std::lower_bound(spoked.begin(), spoked.end(), iv.left) - spoked.begin();
        std::vector<std::array<int, 3>> options;
        if (at > 0) options.push_back({spoked[at - 1], iv.left, iv.right});
        if (at + 2 < static_cast<std::ptrdiff_t>(spoked.size())) options.push_back({iv.left, iv.right, spoked[at + 2]});
        bool done = false;
        for (const auto& o : options) {
            try {
                out.offer(four_face_from_adjacent_triangles(h, s.v0, s.vertex(o[0]), s.vertex(o[1]), s.vertex(o[2])),
                          "adjacent");
                done = true;
                break;
            } catch (const NotAdjacentError&) {
            }
        }
        if (!done) trace["skipped"].push_back({{"interval", {iv.left, iv.right}}, {"reason", "empty, no adjacent triangle"}});
    }
}

void chain_branch(const PipelineState& s, const std::vector<IntervalEdge>& items, Collector& out, json& trace) {
    const TopoDrawing& d = s.arr->drawing();
    const auto inside_of = [&](const IntervalEdge& iv) {
        auto v = vertices_inside(d, std::array<VertexId, 3>{s.v0, s.vertex(iv.left), s.vertex(iv.right)});
        std::sort(v.begin(), v.end());
        return v;
    };
    std::size_t anchor = 0;
    std::vector<VertexId> outer = items.empty() ? std::vector<VertexId>{} : inside_of(items[0]);
    for (std::size_t b = 1; b < items.size(); ++b) {
        const auto inner = inside_of(items[b]);
        std::vector<VertexId> between;
        std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(), std::back_inserter(between));
        std::erase(between, s.vertex(items[b].left));
        std::erase(between, s.vertex(items[b].right));
        if (between.size() < 12) continue;
        const auto& ia = items[anchor];
        const auto& ib = items[b];
        std::vector<EdgeId> six;
        for (int l : {ia.left, ia.right, ib.left, ib.right}) six.push_back(d.edge_id(s.v0, s.vertex(l)));
        six.push_back(ia.edge);
        six.push_back(ib.edge);
        const PlaneSubgraph h6(*s.arr, six);
        const int face = h6.face_of_isolated(between.front());
        KeyTrace kt;
        FourFace f = four_face_in_face(h6, face, &kt);
        trace["chain_pairs"].push_back({{"outer", {ia.left, ia.right}},
                                        {"inner", {ib.left, ib.right}},
                                        {"inside", between.size()},
                                        {"depth", kt.max_depth},
                                        {"steps", kt.steps}});
        out.offer(std::move(f), "key");
        anchor = b;
        outer = inner;
    }
}

// Cube of the degree compared with n avoids a floating cube root.
bool high_degree(int degree, int n) { return static_cast<long>(degree) * degree * degree >= n; }

} // namespace

std::vector<FourFace> k2m_faces(const PipelineState& state, VertexId hub, json* trace) {
    json local;
    json& tr = trace ? *trace : local;
    Collector out(*state.arr, tr);
    k2m_branch(state, state.subgraph(), hub, out);
    return std::move(out.faces);
}

std::vector<FourFace> antichain_faces(const PipelineState& state, const std::vector<IntervalEdge>& items, json* trace) {
    json local;
    json& tr = trace ? *trace : local;
    Collector out(*state.arr, tr);
    antichain_branch(state, state.subgraph(), items, out, tr);
    return std::move(out.faces);
}

std::vector<FourFace> chain_faces(const PipelineState& state, const std::vector<IntervalEdge>& items, json* trace) {
    json local;
    json& tr = trace ? *trace : local;
    Collector out(*state.arr, tr);
    chain_branch(state, items, out, tr);
    return std::move(out.faces);
}

LaminarSplit laminar_decompose(std::vector<IntervalEdge> matching) {
    const auto forest = laminar_forest(std::move(matching));
    LaminarSplit out;
    out.depth = static_cast<int>(forest.chain.size());
    out.width = static_cast<int>(forest.antichain.size());
    out.chain = out.depth > 0 && out.depth >= out.width;
    out.items = out.chain ? forest.chain : forest.antichain;
    return out;
}

PipelineResult extract_disjoint_four_faces(const TopoDrawing& d, json* trace_out) {
    json local;
    json& trace = trace_out ? *trace_out : local;
    trace = json::object();
    trace["n"] = d.n();
    trace["stage"] = "arrangement";

    PipelineResult result;
    auto arr = std::make_shared<const Arrangement>(d);
    if (outer_vertices(*arr).empty()) {
        trace["stage"] = "reprojection";
        arr = std::make_shared<const Arrangement>(ensure_outer_vertex(d));
        result.reprojected = true;
    }
    result.arrangement = arr;
    const VertexId v0 = outer_vertices(*arr).front();
    trace["reprojected"] = result.reprojected;
    trace["v0"] = v0;
    trace["faces"] = json::array();
    trace["filtered"] = json::array();
    trace["fallbacks"] = json::array();

    trace["stage"] = "plane subgraph";
    const PipelineState state = build_plane_subgraph(*arr, v0);
    const TopoDrawing& dd = arr->drawing();
    trace["labels"] = state.labels;
    trace["iterations"] = json::array();
    for (const auto& step : state.steps) {
        json added = json::array();
        json removed = json::array();
        for (EdgeId e : step.added) added.push_back(edge_json(dd, e));
        for (EdgeId e : step.removed) removed.push_back(edge_json(dd, e));
        trace["iterations"].push_back(
            {{"iteration", step.iteration}, {"block", step.block}, {"case", step.branch}, {"added", added}, {"removed", removed}});
    }
    const PlaneSubgraph h = state.subgraph();
    trace["label_edges"] = static_cast<int>(h.edges().size()) - std::count_if(h.edges().begin(), h.edges().end(), [&](EdgeId e) {
                               return dd.endpoints(e).first == v0 || dd.endpoints(e).second == v0;
                           });

    Collector out(*arr, trace);
    VertexId hub = -1;
    for (int l = 1; l < dd.n(); ++l) {
        const VertexId v = state.vertex(l);
        if (hub < 0 || h.degree(v) > h.degree(hub)) hub = v;
    }

    trace["stage"] = "branch";
    std::string branch;
    LaminarForest forest;
    if (hub >= 0 && high_degree(h.degree(hub), dd.n())) {
        branch = "k2m";
        trace["hub"] = hub;
        k2m_branch(state, h, hub, out);
    } else {
        const auto matching = greedy_matching(state);
        trace["matching"] = matching.size();
        forest = laminar_forest(matching);
        const auto split = laminar_decompose(matching);
        trace["depth"] = split.depth;
        trace["width"] = split.width;
        branch = split.chain ? "chain" : "antichain";
        if (split.chain) {
            chain_branch(state, split.items, out, trace);
        } else {
            antichain_branch(state, h, split.items, out, trace);
        }
    }
    trace["branch"] = branch;

    if (out.faces.empty() && branch != "k2m") {
        const std::string other = branch == "chain" ? "antichain" : "chain";
        trace["fallbacks"].push_back(other);
        if (other == "chain") {
            chain_branch(state, forest.chain, out, trace);
        } else {
            antichain_branch(state, h, forest.antichain, out, trace);
        }
    }
    if (out.faces.empty() && hub >= 0 && h.degree(hub) >= 3 && branch != "k2m") {
        trace["fallbacks"].push_back("k2m");
        k2m_branch(state, h, hub, out);
    }
    if (out.faces.empty()) {
        trace["fallbacks"].push_back("triangle scan");
        for (int la = 1; la < dd.n() && out.faces.empty(); ++la) {
            for (int lb = la + 1; lb < dd.n() && out.faces.empty(); ++lb) {
                const Triangle t = make_triangle(*arr, v0, state.vertex(la), state.vertex(lb));
                if (t.empty) continue;
                out.offer(four_face_in_triangle(*arr, t, vertices_inside(dd, t.vertices).front()), "triangle");
            }
        }
    }

    if (out.faces.empty() && dd.n() >= 4) {
        // Some Hamiltonian cycle of the K_4 on v0 and three labels is uncrossed.
        trace["fallbacks"].push_back("cycle scan");
        const VertexId a = state.vertex(1), b = state.vertex(2), c = state.vertex(3);
        for (const auto& cycle : {std::array<VertexId, 4>{v0, a, b, c}, {v0, b, c, a}, {v0, c, a, b}}) {
            if (!is_jordan_cycle(*arr, cycle)) continue;
            out.offer(make_four_face(*arr, cycle), "cycle");
            break;
        }
    }

    trace["stage"] = "done";
    trace["count"] = out.faces.size();
    if (!verify_disjoint(out.faces)) throw InvariantViolation("pipeline returned overlapping faces");
    result.faces = std::move(out.faces);
    result.trace = trace;
    return result;
}

} // namespace topoface
