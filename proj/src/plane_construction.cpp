#include "topoface/facefinder.hpp"

#include "topoface/errors.hpp"

#include <algorithm>

namespace topoface {

namespace {

std::vector<int> degrees(const PipelineState& s) {
    const TopoDrawing& d = s.arr->drawing();
    std::vector<int> deg(d.n(), 0);
    for (EdgeId e : s.edges) {
        ++deg[d.endpoints(e).first];
        ++deg[d.endpoints(e).second];
    }
    return deg;
}

bool has_edge(const PipelineState& s, EdgeId e) { return std::binary_search(s.edges.begin(), s.edges.end(), e); }

bool block_all_degree_one(const PipelineState& s, const std::vector<int>& deg, int j) {
    const auto& block = s.blocks[j];
    return block.size() == 5 &&
           std::all_of(block.begin(), block.end(), [&](int label) { return deg[s.vertex(label)] == 1; });
}

bool triangle_empty(const PipelineState& s, VertexId a, VertexId b) {
    return vertices_inside(s.arr->drawing(), std::array<VertexId, 3>{s.v0, a, b}).empty();
}

VertexId first_inner_target(const PlaneSubgraph& h, VertexId v) {
    return h.drawing().other_end(inner_edges(h, v, InnerNeed::one).front(), v);
}

PlaneSubgraph with_edges(const PipelineState& s, std::vector<EdgeId> add, std::vector<EdgeId> remove = {}) {
    std::vector<EdgeId> edges;
    for (EdgeId e : s.edges) {
        if (std::find(remove.begin(), remove.end(), e) == remove.end()) edges.push_back(e);
    }
    edges.insert(edges.end(), add.begin(), add.end());
    return PlaneSubgraph(*s.arr, std::move(edges));
}

// One iteration on block j, whose five vertices all have degree one.
PlaneStep advance(const PipelineState& s, int j) {
    const TopoDrawing& d = s.arr->drawing();
    std::array<VertexId, 6> u{};
    for (int t = 1; t <= 5; ++t) u[t] = s.vertex(s.blocks[j][t - 1]);
    const auto edge = [&](VertexId a, VertexId b) { return d.edge_id(a, b); };

    PlaneStep step;
    step.block = j;
    const VertexId vk = first_inner_target(s.subgraph(), u[3]);
    if (vk != u[2] && vk != u[4]) {
        step.branch = "case1";
        step.added = {edge(u[3], vk)};
        return step;
    }
    std::string side;
    if (vk == u[2]) {
        std::reverse(u.begin() + 1, u.end());
        side = " mirrored";
    }
    if (!triangle_empty(s, u[3], u[4])) {
        step.branch = "case2 nonempty" + side;
        step.added = {edge(u[3], u[4])};
        return step;
    }
    const VertexId vl = first_inner_target(with_edges(s, {edge(u[3], u[4])}), u[2]);
    if (vl == u[3]) {
        step.branch = "case2 adjacent" + side;
        step.added = {edge(u[3], u[4]), edge(u[2], u[3])};
        return step;
    }
    if (vl != u[1]) {
        step.branch = "case2 other" + side;
        step.added = {edge(u[2], vl)};
        return step;
    }
    if (!triangle_empty(s, u[1], u[2])) {
        step.branch = "case2 u1 nonempty" + side;
        step.added = {edge(u[1], u[2])};
        return step;
    }
    const EdgeId spoke3 = edge(s.v0, u[3]);
    const VertexId vt = first_inner_target(with_edges(s, {edge(u[1], u[2])}, {spoke3}), u[4]);
    if (s.arr->crossings_between(edge(u[4], vt), spoke3) > 0) {
        step.removed = {spoke3};
        if (vt == u[5]) {
            step.branch = "case2a u5" + side;
            step.added = {edge(u[4], u[5])};
        } else if (vt == u[2]) {
            step.branch = "case2a u2" + side;
            step.added = {edge(u[1], u[2]), edge(u[2], u[4])};
        } else {
            step.branch = "case2a other" + side;
            step.added = {edge(u[4], vt)};
        }
        return step;
    }
    if (vt == u[5]) {
        step.branch = "case2b u5" + side;
        step.added = {edge(u[3], u[4]), edge(u[4], u[5])};
    } else {
        step.branch = "case2b other" + side;
        step.added = {edge(u[4], vt)};
    }
    return step;
}

void apply(PipelineState& s, const PlaneStep& step) {
    for (EdgeId e : step.removed) s.edges.erase(std::remove(s.edges.begin(), s.edges.end(), e), s.edges.end());
    s.edges.insert(s.edges.end(), step.added.begin(), step.added.end());
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
}

void check(const PipelineState& s) {
    const auto failures = plane_property_failures(s);
    if (failures.empty()) return;
    std::string msg = "after iteration " + std::to_string(s.iteration) + ":";
    for (const auto& f : failures) msg += " " + f + ";";
    throw InvariantViolation(msg);
}

} // namespace

PipelineState build_plane_subgraph(const Arrangement& arr, VertexId v0, const PlaneOptions& options) {
    const TopoDrawing& d = arr.drawing();
    PipelineState s;
    s.arr = &arr;
    s.v0 = v0;
    s.labels.push_back(v0);
    for (VertexId v : clockwise_labels(arr, v0)) s.labels.push_back(v);
    s.label_of.assign(d.n(), 0);
    for (int l = 0; l < d.n(); ++l) s.label_of[s.labels[l]] = l;
    for (int l = 1; l < d.n(); l += 5) {
        s.blocks.emplace_back();
        for (int t = l; t < std::min(l + 5, d.n()); ++t) s.blocks.back().push_back(t);
    }
    for (VertexId v = 0; v < d.n(); ++v) {
        if (v != v0) s.edges.push_back(d.edge_id(v0, v));
    }
    std::sort(s.edges.begin(), s.edges.end());
    if (options.check_properties) check(s);

    const int iterations = options.iterations < 0 ? std::max(d.n() / 12, 1) : options.iterations;
    while (s.iteration < iterations) {
        const auto deg = degrees(s);
        int block = -1;
        for (int j = 0; j < static_cast<int>(s.blocks.size()) && block < 0; ++j) {
            if (block_all_degree_one(s, deg, j)) block = j;
        }
        if (block < 0) {
            s.steps.push_back({s.iteration + 1, -1, "no free block", {}, {}});
            break;
        }
        PlaneStep step = advance(s, block);
        step.iteration = s.iteration + 1;
        apply(s, step);
        s.iteration = step.iteration;
        s.steps.push_back(std::move(step));
        if (options.check_properties) check(s);
    }
    return s;
}

std::vector<std::string> plane_property_failures(const PipelineState& s) {
    const TopoDrawing& d = s.arr->drawing();
    const int n = d.n();
    std::vector<std::string> failures;
    try {
        s.subgraph();
    } catch (const NotPlaneError& e) {
        failures.push_back(std::string("not plane: ") + e.what());
        return failures;
    }
    const auto deg = degrees(s);

    int label_edges = 0;
    for (EdgeId e : s.edges) {
        const auto [a, b] = d.endpoints(e);
        if (a != s.v0 && b != s.v0) ++label_edges;
    }
    if (label_edges < s.iteration) {
        failures.push_back("property 1: " + std::to_string(label_edges) + " label edges");
    }

    int free_blocks = 0;
    for (int j = 0; j < static_cast<int>(s.blocks.size()); ++j) free_blocks += block_all_degree_one(s, deg, j);
    if (free_blocks < (n - 1) / 5 - 2 * s.iteration) {
        failures.push_back("property 2: " + std::to_string(free_blocks) + " free blocks");
    }

    // Labels whose spokes are present, in clockwise order.
    std::vector<int> spoked;
    for (int l = 1; l < n; ++l) {
        if (has_edge(s, d.edge_id(s.v0, s.vertex(l)))) spoked.push_back(l);
    }
    const auto block_of = [](int label) { return (label - 1) / 5; };
    const auto triangle = [&](int a, int b) {
        return has_edge(s, d.edge_id(s.vertex(a), s.vertex(b)));
    };
    for (std::size_t i = 0; i < spoked.size(); ++i) {
        for (std::size_t j = i + 1; j < spoked.size(); ++j) {
            const int a = spoked[i];
            const int b = spoked[j];
            if (!triangle(a, b) || !triangle_empty(s, s.vertex(a), s.vertex(b))) continue;
            const std::string name = "empty triangle at labels " + std::to_string(a) + "," + std::to_string(b);
            // Consecutive among spoked labels: a deleted spoke may sit between them.
            if (j != i + 1 || block_of(a) != block_of(b)) {
                failures.push_back("property 3: " + name + " is not a consecutive pair of one block");
                continue;
            }
            bool adjacent = false;
            if (i > 0) {
                const int p = spoked[i - 1];
                adjacent |= block_of(p) == block_of(a) && triangle(p, a);
            }
            if (j + 1 < spoked.size()) {
                const int q = spoked[j + 1];
                adjacent |= block_of(q) == block_of(b) && triangle(b, q);
            }
            if (!adjacent) failures.push_back("property 3: " + name + " has no adjacent triangle in its block");
        }
    }

    for (int l = 1; l < n; ++l) {
        const VertexId v = s.vertex(l);
        if (!has_edge(s, d.edge_id(s.v0, v)) && deg[v] != 0) {
            failures.push_back("property 4: vertex " + std::to_string(v) + " lost its spoke but is not isolated");
        }
    }
    return failures;
}

} // namespace topoface
