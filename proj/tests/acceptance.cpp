#include "testkit.hpp"

#include "topoface/drawing_io.hpp"
#include "topoface/errors.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace topoface;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string cycle_text(std::span<const VertexId> cycle) {
    std::string out;
    for (VertexId v : cycle) out += (out.empty() ? "" : "-") + std::to_string(v);
    return out;
}

long threshold(int n) {
    return std::max(1L, static_cast<long>(std::floor(std::cbrt(static_cast<double>(n)) / 28)) - 1);
}

// Every non-self-intersecting odd cycle of the twisted drawing holds the probe.
Outcome twisted_odd_faces() {
    Outcome o;
    long checked = 0;
    for (int n = 4; n <= 9; ++n) {
        const TopoDrawing d = gen_twisted(n);
        const Arrangement arr(d);
        const Point probe = twisted_probe(n);
        for (int k = 3; k <= n; k += 2) {
            for (const auto& cycle : jordan_cycles(arr, k)) {
                ++checked;
                if (!ray_parity_auto(probe, cycle_curves(d, cycle))) {
                    o.fail("n=" + std::to_string(n) + " cycle " + cycle_text(cycle) + " misses the probe");
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " odd faces";
    return o;
}

Outcome twisted_square_areas() {
    Outcome o;
    long checked = 0;
    Scalar low(1);
    for (int n = 5; n <= 8; ++n) {
        const auto ts = gen_twisted_square(n, ratio(1, 10));
        const Arrangement arr(ts.drawing);
        for (int k = 3; k <= n; k += 2) {
            for (const auto& cycle : jordan_cycles(arr, k)) {
                ++checked;
                const Scalar area = abs(signed_area(cycle_ring(ts.drawing, cycle)));
                low = std::min(low, area);
                if (area < ratio(9, 10)) o.fail("n=" + std::to_string(n) + " cycle " + cycle_text(cycle) + " area " + area.get_str());
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " odd faces, min area " + low.get_str();
    return o;
}

struct PipelineRun {
    std::string name;
    int n = 0;
    bool unit_square = false;
    std::optional<PipelineResult> result;
    std::string error;
};

std::vector<PipelineRun>& pipeline_runs() {
    static std::vector<PipelineRun> runs;
    if (!runs.empty()) return runs;
    for (int n : {40, 64, 80}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            runs.push_back({"straightline n=" + std::to_string(n) + " seed=" + std::to_string(seed), n, true, {}, {}});
            try {
                runs.back().result = extract_disjoint_four_faces(gen_random_straightline(n, seed));
            } catch (const Error& e) {
                runs.back().error = e.what();
            }
        }
        runs.push_back({"twisted n=" + std::to_string(n), n, false, {}, {}});
        try {
            runs.back().result = extract_disjoint_four_faces(gen_twisted(n));
        } catch (const Error& e) {
            runs.back().error = e.what();
        }
    }
    return runs;
}

Outcome pipeline_guarantees() {
    Outcome o;
    std::size_t low = SIZE_MAX;
    for (const auto& run : pipeline_runs()) {
        if (!run.result) {
            o.fail(run.name + ": " + run.error);
            continue;
        }
        const auto& r = *run.result;
        for (const auto& f : r.faces) {
            if (!revalidate(*r.arrangement, f)) o.fail(run.name + ": face " + cycle_text(f.cycle) + " does not revalidate");
        }
        if (!verify_disjoint(r.faces)) o.fail(run.name + ": faces overlap");
        if (static_cast<long>(r.faces.size()) < threshold(run.n)) o.fail(run.name + ": too few faces");
        low = std::min(low, r.faces.size());
    }
    if (o.pass) o.detail = std::to_string(pipeline_runs().size()) + " runs, min count " + std::to_string(low);
    return o;
}

Outcome small_face_bound() {
    Outcome o;
    int runs = 0;
    for (const auto& run : pipeline_runs()) {
        if (!run.unit_square) continue;
        if (!run.result) {
            o.fail(run.name + ": " + run.error);
            continue;
        }
        const auto& faces = run.result->faces;
        if (faces.empty()) {
            o.fail(run.name + ": no faces");
            continue;
        }
        ++runs;
        Scalar total(0);
        Scalar low = faces.front().area;
        for (const auto& f : faces) {
            total += f.area;
            low = std::min(low, f.area);
        }
        if (low * static_cast<long>(faces.size()) > 1) o.fail(run.name + ": min area above 1/count");
        if (total > 1) o.fail(run.name + ": total area above 1");
    }
    if (o.pass) o.detail = std::to_string(runs) + " unit-square runs";
    return o;
}

Outcome brute_force_oracle() {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        const std::string name = "n=" + std::to_string(n) + " seed=" + std::to_string(1000 + seed);
        const auto r = extract_disjoint_four_faces(gen_random_straightline(n, 1000 + seed));
        std::set<std::array<VertexId, 4>> all;
        for (const auto& f : brute_force_four_faces(*r.arrangement)) all.insert(canonical_cycle(f.cycle));
        for (const auto& f : r.faces) {
            if (!all.count(canonical_cycle(f.cycle))) o.fail(name + ": " + cycle_text(f.cycle) + " is not a 4-face");
        }
        if (static_cast<int>(r.faces.size()) > brute_force_max_disjoint(*r.arrangement)) o.fail(name + ": count above maximum");
    }
    if (o.pass) o.detail = "50 drawings";
    return o;
}

Outcome cycle_space_checks() {
    Outcome o;
    const std::size_t expected[] = {1, 7, 63};
    for (int n = 3; n <= 5; ++n) {
        const auto all = cycle_space(n);
        if (all.size() != expected[n - 3]) o.fail("n=" + std::to_string(n) + ": " + std::to_string(all.size()) + " cycles");
        if (std::set<Z2EdgeChain>(all.begin(), all.end()).size() != all.size()) o.fail("duplicate cycles");
        for (const auto& z : all) {
            if (z.empty() || !boundary(n, z).empty()) o.fail("n=" + std::to_string(n) + ": " + format_chain(n, z) + " is not a cycle");
        }
    }
    const Arrangement arr(gen_random_straightline(5, 13));
    for (const auto& z : cycle_space(5)) {
        const CellSet cells = inside_chain(arr, z);
        // Oracle: arcs with exactly one side in the set.
        std::vector<ArcId> frontier;
        for (ArcId a = 0; a < arr.arc_count(); ++a) {
            const bool left = std::binary_search(cells.begin(), cells.end(), arr.cell_of(2 * a));
            const bool right = std::binary_search(cells.begin(), cells.end(), arr.cell_of(2 * a + 1));
            if (left != right) frontier.push_back(a);
        }
        auto arcs = push_forward(arr, z);
        std::sort(arcs.begin(), arcs.end());
        if (frontier != arcs) o.fail(format_chain(5, z) + ": boundary mismatch");
    }
    if (o.pass) o.detail = "1, 7, 63 cycles";
    return o;
}

Outcome area_monte_carlo() {
    Outcome o;
    const TopoDrawing d = gen_random_straightline(5, 21);
    const Arrangement arr(d);
    const auto all = cycle_space(5);
    std::mt19937_64 rng(7);
    const int samples = 10000;
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        const auto& z = all[rng() % all.size()];
        const double p = z2_area(arr, z).get_d();
        int hits = 0;
        for (int s = 0; s < samples; ++s) hits += lk2(d, z, testkit::random_point(rng, Scalar(0), Scalar(1)));
        const double sigma = std::max(std::sqrt(p * (1 - p) / samples), 1.0 / samples);
        const double z_score = std::abs(static_cast<double>(hits) / samples - p) / sigma;
        worst = std::max(worst, z_score);
        if (z_score > 3) o.fail(format_chain(5, z) + ": " + std::to_string(z_score) + " sigma");
    }
    std::ostringstream s;
    s.precision(3);
    s << "worst " << worst << " sigma";
    if (o.pass) o.detail = s.str();
    return o;
}

Outcome bit_model() {
    Outcome o;
    const int m = 1600;
    const int trials = 20;
    const auto sim = simulate_rect_areas(5, m, trials, 1);
    long low = m;
    for (long a : sim.min_area) {
        low = std::min(low, a);
        if (3 * a < m) o.fail("trial minimum " + std::to_string(a) + " below m/3");
    }
    const double tolerance = 3 * (std::sqrt(m) / 2) / std::sqrt(trials);
    for (std::size_t c = 0; c < sim.mean_area.size(); ++c) {
        if (std::abs(sim.mean_area[c] - m / 2.0) > tolerance) o.fail(format_chain(5, sim.cycles[c]) + ": mean out of range");
    }
    if (sim.cycles.size() != 63) o.fail("expected 63 cycles");
    if (o.pass) o.detail = "min area " + std::to_string(low);
    return o;
}

Outcome bit_model_geometry() {
    Outcome o;
    const auto r = gen_z2_rect({4, 12, 7, Scalar(0), {}});
    const Arrangement arr(r.drawing);
    Scalar worst(0);
    for (const auto& z : cycle_space(4)) {
        const Scalar gap = abs(z2_area(arr, z) - bit_model_area(r.bits, z));
        worst = std::max(worst, gap);
        if (gap > ratio(1, 4)) o.fail(format_chain(4, z) + ": gap " + gap.get_str());
    }
    if (o.pass) o.detail = "7 cycles, max gap " + std::to_string(worst.get_d());
    return o;
}

Outcome key_lemma() {
    Outcome o;
    int count = 0;
    for (int k : {5, 6}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto inst = testkit::key_instance(k, seed, seed > 5);
            const Arrangement arr(inst.drawing);
            const PlaneSubgraph h = testkit::polygon_subgraph(arr, inst);
            const int face = h.face_of_isolated(inst.interior.front());
            const FourFace f = four_face_in_face(h, face);
            ++count;
            if (!revalidate(arr, f) || !testkit::subset(f.cells, h.face(face).cells)) {
                o.fail("k=" + std::to_string(k) + " seed=" + std::to_string(seed));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " instances";
    return o;
}

Outcome structural_invariants() {
    Outcome o;
    const std::vector<TopoDrawing> drawings{gen_twisted(9), gen_random_straightline(20, 3), gen_twisted_square(7, ratio(1, 10)).drawing,
                                            gen_z2_rect({5, 8, 2, Scalar(0), {}}).drawing, testkit::inverted_convex_k5()};
    for (std::size_t i = 0; i < drawings.size(); ++i) {
        const Arrangement arr = planarize(drawings[i]);
        if (arr.node_count() - arr.arc_count() + arr.cell_count() != 2) o.fail("euler fails on drawing " + std::to_string(i));
        if (parse_drawing(format_drawing(drawings[i])) != drawings[i]) o.fail("round trip fails on drawing " + std::to_string(i));
    }

    const TopoDrawing d = gen_random_straightline(7, 17);
    const auto cycles = jordan_cycles(Arrangement(d), 5);
    std::mt19937_64 rng(3);
    int agreed = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& cycle = cycles[rng() % cycles.size()];
        const auto curves = cycle_curves(d, cycle);
        const Point p = testkit::random_point(rng, Scalar(0), Scalar(1));
        std::set<bool> seen;
        for (int k = 0; k < 10; ++k) {
            try {
                seen.insert(ray_parity(p, ray_direction(k), curves));
            } catch (const DegeneracyError&) {
            }
        }
        if (seen.size() > 1) o.fail("ray directions disagree");
        agreed += seen.size() == 1;
    }
    if (agreed < 100) o.fail("only " + std::to_string(agreed) + " points had a usable direction");

    for (const TopoDrawing& big : {gen_twisted(45), gen_random_straightline(45, 8)}) {
        const Arrangement arr(big);
        const PipelineState s = build_plane_subgraph(arr, outer_vertices(arr).front());
        for (const auto& why : plane_property_failures(s)) o.fail("plane property: " + why);
    }
    if (o.pass) o.detail = "euler, round trip, 1000 rays, plane properties at n=45";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"odd faces of the twisted drawing hold the probe", twisted_odd_faces},
        {"odd faces of the twisted square have area >= 9/10", twisted_square_areas},
        {"pipeline faces revalidate, are disjoint and meet the count", pipeline_guarantees},
        {"small 4-face area bound in the unit square", small_face_bound},
        {"pipeline agrees with brute force", brute_force_oracle},
        {"cycle space counts and boundaries", cycle_space_checks},
        {"z2 area agrees with Monte Carlo linking", area_monte_carlo},
        {"bit model minimum and means", bit_model},
        {"bit model matches geometric area", bit_model_geometry},
        {"key lemma faces stay inside", key_lemma},
        {"structural invariants", structural_invariants},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("criterion %2d %s  %s (%s) [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
