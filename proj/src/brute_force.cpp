#include "topoface/facefinder.hpp"

#include "topoface/errors.hpp"

#include <algorithm>
#include <bitset>
#include <optional>

namespace topoface {

namespace {

constexpr int kBruteForceLimit = 8;

// At most 3 * C(8, 4) = 210 cycles.
using Mask = std::bitset<256>;

void require_small(int n) {
    if (n > kBruteForceLimit) {
        throw TooLargeError("exhaustive 4-face search supports n <= 8, got " + std::to_string(n));
    }
}

void grow(const std::vector<Mask>& conflicts, Mask candidates, int size, int& best) {
    if (candidates.none()) {
        best = std::max(best, size);
        return;
    }
    if (size + static_cast<int>(candidates.count()) <= best) return;
    std::size_t v = 0;
    while (!candidates[v]) ++v;
    candidates.reset(v);
    grow(conflicts, candidates & ~conflicts[v], size + 1, best);
    grow(conflicts, candidates, size, best);
}

} // namespace

std::vector<FourFace> brute_force_four_faces(const Arrangement& arr) {
    require_small(arr.vertex_count());
    std::vector<FourFace> out;
    for (const auto& c : jordan_cycles(arr, 4)) out.push_back(make_four_face(arr, {c[0], c[1], c[2], c[3]}));
    return out;
}

int brute_force_max_disjoint(const Arrangement& arr) {
    const auto faces = brute_force_four_faces(arr);
    const int m = static_cast<int>(faces.size());
    std::vector<Mask> conflicts(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!verify_disjoint({faces[i], faces[j]})) {
                conflicts[i].set(j);
                conflicts[j].set(i);
            }
        }
    }
    Mask all;
    for (int i = 0; i < m; ++i) all.set(i);
    int best = 0;
    grow(conflicts, all, 0, best);
    return best;
}

HeilbronnResult heilbronn_min_area(const TopoDrawing& d, int k) {
    if (k != 3 && k != 4) throw PreconditionError("k must be 3 or 4");
    std::optional<HeilbronnResult> best;
    const auto consider = [&](std::vector<VertexId> cycle, const Scalar& area, bool exact) {
        if (!best || area < best->area) best = HeilbronnResult{area, std::move(cycle), exact};
    };
    if (k == 3 || d.n() <= kBruteForceLimit) {
        // Every 3-cycle of a simple drawing is a closed Jordan curve.
        const Arrangement arr(d);
        for (const auto& c : jordan_cycles(arr, k)) consider(c, abs(signed_area(cycle_ring(d, c))), true);
    } else {
        const auto result = extract_disjoint_four_faces(d);
        // Areas are taken in d even if the pipeline reprojected it.
        for (const auto& f : result.faces) {
            consider({f.cycle.begin(), f.cycle.end()}, abs(signed_area(cycle_ring(d, f.cycle))), false);
        }
    }
    if (!best) throw PreconditionError("the drawing has no " + std::to_string(k) + "-face");
    return *best;
}

} // namespace topoface
