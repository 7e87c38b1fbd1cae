#include "topoface/arrangement.hpp"
#include "topoface/drawing_io.hpp"
#include "topoface/errors.hpp"
#include "topoface/facefinder.hpp"
#include "topoface/generators.hpp"
#include "topoface/homology.hpp"
#include "topoface/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using nlohmann::json;
using namespace topoface;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TOPOFACE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("TOPOFACE_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

json point_json(const Point& p) { return json::array({format_scalar(p.x), format_scalar(p.y)}); }

json edge_pair(const TopoDrawing& d, EdgeId e) {
    return json::array({d.endpoints(e).first, d.endpoints(e).second});
}

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("point must be x,y: " + text);
    return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

std::vector<VertexId> parse_cycle(const std::string& text) {
    std::vector<VertexId> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("cycle must be a comma separated vertex list: " + text);
        }
    }
    return out;
}

std::vector<Point> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_array()) throw ParseError(path + ": expected an array of [x, y] points");
    std::vector<Point> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError(path + ": expected an array of [x, y] points");
        const auto coord = [&](const json& c) {
            return parse_scalar(c.is_string() ? c.get<std::string>() : c.dump());
        };
        out.push_back({coord(p[0]), coord(p[1])});
    }
    return out;
}

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

json run_report(const std::string& command, json parameters) {
    return {{"schema", 1}, {"command", command}, {"parameters", std::move(parameters)}};
}

json face_report(const FourFace& f) {
    return {{"cycle", f.cycle}, {"area", format_scalar(f.area)}, {"cells", f.cells.size()}};
}

struct Common {
    std::string out;
};

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    int n = 5;
    int m = 12;
    std::string eps = "1/10";
    std::uint64_t seed = 1;
    std::string points;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    TopoDrawing d = [&] {
        if (a.kind == "twisted") return gen_twisted(a.n);
        if (a.kind == "twisted-square") return gen_twisted_square(a.n, parse_scalar(a.eps)).drawing;
        if (a.kind == "z2rect") return gen_z2_rect({a.n, a.m, a.seed, Scalar(0), {}}).drawing;
        if (!a.points.empty()) return gen_straightline(read_points(a.points));
        return gen_random_straightline(a.n, a.seed);
    }();
    const auto report = validate(d, a.kind == "z2rect" ? ValidationMode::generic : ValidationMode::simple);
    if (a.out.empty() || a.out == "-") {
        std::cout << format_drawing(d);
    } else {
        write_drawing(d, a.out);
    }
    std::cerr << a.kind << ": n=" << d.n() << " edges=" << d.edge_count() << " crossings=" << report.crossing_count
              << " valid=" << (report.valid() ? "true" : "false") << "\n";
    return 0;
}

// --- validate / planarize / faces -------------------------------------------

int cmd_validate(const std::string& path, const std::string& mode_name, const std::string& out) {
    const TopoDrawing d = read_drawing(path);
    const auto mode = mode_name == "generic" ? ValidationMode::generic : ValidationMode::simple;
    const auto report = validate(d, mode);
    json violations = json::array();
    for (const auto& v : report.violations) {
        json edges = json::array({edge_pair(d, v.edge_a)});
        if (v.edge_b >= 0) edges.push_back(edge_pair(d, v.edge_b));
        violations.push_back({{"kind", to_string(v.kind)}, {"edges", edges}, {"witness", point_json(v.witness)}});
    }
    json r = run_report("validate", {{"input", path}, {"mode", mode_name}});
    r["outputs"] = {{"valid", report.valid()}, {"crossings", report.crossing_count}, {"violations", violations}};
    emit(r, out);
    std::cerr << path << ": " << (report.valid() ? "valid" : "invalid") << " " << mode_name << " drawing, "
              << report.violations.size() << " violations\n";
    return report.valid() ? 0 : kExitInput;
}

int cmd_planarize(const std::string& path, bool with_cells, const std::string& out) {
    const Arrangement arr(read_drawing(path));
    const int v = arr.node_count();
    const int e = arr.arc_count();
    const int f = arr.cell_count();
    json r = run_report("planarize", {{"input", path}});
    r["outputs"] = {{"vertices", arr.vertex_count()}, {"crossings", arr.crossing_count()}, {"nodes", v},
                    {"arcs", e},       {"cells", f},     {"outer_cell", arr.outer_cell()}};
    r["checks"] = {{"euler", v - e + f == 2}};
    if (with_cells) {
        json cells = json::array();
        for (CellId c = 0; c < f; ++c) {
            if (c == arr.outer_cell()) continue;
            cells.push_back({{"id", c}, {"area", format_scalar(arr.cell_area(c))}, {"point", point_json(arr.cell_point(c))}});
        }
        r["outputs"]["cell_list"] = cells;
    }
    emit(r, out);
    std::cerr << path << ": " << arr.crossing_count() << " crossings, " << f << " cells\n";
    return 0;
}

int cmd_faces(const std::string& path, int k, const std::string& out) {
    const Arrangement arr(read_drawing(path));
    const TopoDrawing& d = arr.drawing();
    json faces = json::array();
    for (const auto& c : jordan_cycles(arr, k)) {
        faces.push_back({{"cycle", c}, {"area", format_scalar(abs(signed_area(cycle_ring(d, c))))}});
    }
    json r = run_report("faces", {{"input", path}, {"k", k}});
    r["outputs"] = {{"count", faces.size()}, {"faces", faces}};
    emit(r, out);
    std::cerr << path << ": " << faces.size() << " " << k << "-faces\n";
    return 0;
}

// --- find4 / heilbronn ------------------------------------------------------

int cmd_find4(const std::string& path, std::string trace_path, bool timings, const std::string& out) {
    const TopoDrawing d = read_drawing(path);
    if (trace_path.empty()) trace_path = path + ".trace.json";
    json trace;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto result = extract_disjoint_four_faces(d, &trace);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json faces = json::array();
        Scalar total(0);
        std::optional<Scalar> smallest;
        bool valid = true;
        for (const auto& f : result.faces) {
            faces.push_back(face_report(f));
            total += f.area;
            if (!smallest || f.area < *smallest) smallest = f.area;
            valid = valid && revalidate(*result.arrangement, f);
        }
        json r = run_report("find4", {{"input", path}});
        r["outputs"] = {{"count", result.faces.size()},
                        {"faces", faces},
                        {"total_area", format_scalar(total)},
                        {"min_area", smallest ? json(format_scalar(*smallest)) : json(nullptr)},
                        {"branch", trace.value("branch", "")},
                        {"reprojected", result.reprojected}};
        r["checks"] = {{"disjoint", verify_disjoint(result.faces)}, {"faces_valid", valid}};
        if (timings) r["timings"] = {{"seconds", seconds}};
        emit(r, out);
        std::cerr << path << ": " << result.faces.size() << " disjoint 4-faces via " << trace.value("branch", "?")
                  << "\n";
        return 0;
    } catch (const Error&) {
        std::ofstream t(trace_path);
        t << trace.dump(2) << "\n";
        std::cerr << "pipeline trace written to " << trace_path << "\n";
        throw;
    }
}

int cmd_heilbronn(const std::string& path, int k, const std::string& out) {
    const TopoDrawing d = read_drawing(path);
    const auto result = heilbronn_min_area(d, k);
    json r = run_report("heilbronn", {{"input", path}, {"k", k}});
    r["outputs"] = {{"area", format_scalar(result.area)}, {"cycle", result.cycle}, {"exact", result.exact}};
    emit(r, out);
    std::cerr << path << ": smallest " << k << "-face area " << format_scalar(result.area)
              << (result.exact ? "" : " (upper bound)") << "\n";
    return 0;
}

// --- z2 ---------------------------------------------------------------------

int cmd_z2_area(const std::string& path, const std::string& chain, const std::string& out) {
    const Arrangement arr(read_drawing(path));
    const int n = arr.vertex_count();
    const auto z = parse_chain(n, chain);
    json r = run_report("z2 area", {{"input", path}, {"chain", chain}});
    r["outputs"] = {{"chain", format_chain(n, z)}, {"area", format_scalar(z2_area(arr, z))}};
    emit(r, out);
    return 0;
}

int cmd_z2_inside(const std::string& path, const std::string& chain, const std::string& point, const std::string& out) {
    const TopoDrawing d = read_drawing(path);
    const auto z = parse_chain(d.n(), chain);
    if (!is_cycle(d.n(), z)) throw PreconditionError("chain has a nonempty boundary");
    const Point p = parse_point(point);
    json r = run_report("z2 inside", {{"input", path}, {"chain", chain}, {"point", point_json(p)}});
    r["outputs"] = {{"lk2", lk2(d, z, p) ? 1 : 0}};
    emit(r, out);
    return 0;
}

int cmd_z2_enumerate(int n, const std::string& out) {
    json cycles = json::array();
    bool closed = true;
    for_each_cycle(n, [&](const Z2EdgeChain& z) {
        closed = closed && boundary(n, z).empty();
        cycles.push_back(format_chain(n, z));
    });
    json r = run_report("z2 enumerate", {{"n", n}});
    r["outputs"] = {{"count", cycles.size()}, {"cycles", cycles}};
    r["checks"] = {{"boundaries_empty", closed}};
    emit(r, out);
    std::cerr << "K_" << n << ": " << cycles.size() << " nonzero Z2 cycles\n";
    return 0;
}

int cmd_z2_simulate(int n, int m, int trials, std::uint64_t seed, int jobs, const std::string& out) {
    if (trials < 1) throw PreconditionError("--trials must be positive");
    jobs = std::clamp(jobs, 1, trials);
    // Trial t always uses seed + t, so chunks merge into the sequential result.
    std::vector<RectSimulation> parts(jobs);
    std::vector<std::thread> workers;
    const int base = trials / jobs;
    const int extra = trials % jobs;
    int first = 0;
    for (int j = 0; j < jobs; ++j) {
        const int count = base + (j < extra ? 1 : 0);
        workers.emplace_back([&, j, first, count] { parts[j] = simulate_rect_areas(n, m, count, seed + first); });
        first += count;
    }
    for (auto& w : workers) w.join();

    const auto& cycles = parts.front().cycles;
    std::vector<double> mean(cycles.size(), 0);
    std::vector<long> min_area;
    long below = 0;
    for (const auto& p : parts) {
        for (std::size_t c = 0; c < cycles.size(); ++c) mean[c] += p.mean_area[c] * p.trials / trials;
        min_area.insert(min_area.end(), p.min_area.begin(), p.min_area.end());
        below += p.below_third;
    }
    json per_cycle = json::array();
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        per_cycle.push_back({{"cycle", format_chain(n, cycles[c])}, {"mean_area", mean[c]}});
    }
    const bool all_above = std::all_of(min_area.begin(), min_area.end(), [&](long a) { return 3 * a >= m; });
    json r = run_report("z2 simulate", {{"n", n}, {"m", m}, {"trials", trials}, {"jobs", jobs}});
    r["seed"] = seed;
    r["outputs"] = {{"min_area", min_area},
                    {"cycles", per_cycle},
                    {"below_third", below},
                    {"tail_frequency", static_cast<double>(below) / (static_cast<double>(trials) * cycles.size())}};
    r["checks"] = {{"min_at_least_third", all_above}};
    emit(r, out);
    std::cerr << "bit model n=" << n << " m=" << m << ": min over trials and cycles "
              << *std::min_element(min_area.begin(), min_area.end()) << ", m/3 = " << m / 3.0 << "\n";
    return 0;
}

// --- render -----------------------------------------------------------------

struct RenderArgs {
    std::string input;
    std::string out;
    std::vector<std::string> cycles;
    std::vector<std::string> fills;
    std::vector<std::string> probes;
    bool find4 = false;
    bool no_crossings = false;
    int width = 800;
};

int cmd_render(const RenderArgs& a) {
    const Arrangement arr(read_drawing(a.input));
    SvgOptions options;
    options.width = a.width;
    options.show_crossings = !a.no_crossings;
    for (const auto& c : a.cycles) options.highlight_cycles.push_back(parse_cycle(c));
    for (const auto& c : a.fills) {
        const auto cycle = parse_cycle(c);
        options.fill_faces.push_back(cells_inside_cycle(arr, cycle));
        options.highlight_cycles.push_back(cycle);
    }
    for (const auto& p : a.probes) options.probes.push_back(parse_point(p));
    if (a.find4) {
        const auto result = extract_disjoint_four_faces(arr.drawing());
        if (result.reprojected) throw PreconditionError("--find4 needs a drawing with a vertex on the outer cell");
        for (const auto& f : result.faces) {
            options.fill_faces.push_back(f.cells);
            options.highlight_cycles.emplace_back(f.cycle.begin(), f.cycle.end());
        }
    }
    const std::string svg = render_svg(arr, options);
    if (a.out.empty() || a.out == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(a.out);
        if (!out) throw ParseError("cannot write " + a.out);
        out << svg;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for complete topological graph drawings and their 4-faces"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::uint64_t seed = 0;
    bool seed_given = false;
    const auto seed_option = [&](CLI::App* sub) {
        sub->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "Random seed (default TOPOFACE_SEED or 1)");
    };
    const auto resolved_seed = [&] { return seed_given ? seed : default_seed(); };

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a generated drawing");
    generate->add_option("kind", gen.kind, "twisted | twisted-square | straightline | z2rect")
        ->required()
        ->check(CLI::IsMember({"twisted", "twisted-square", "straightline", "z2rect"}));
    generate->add_option("--n", gen.n, "Vertex count");
    generate->add_option("--m", gen.m, "Columns of the z2rect drawing");
    generate->add_option("--eps", gen.eps, "Area slack of twisted-square, a rational");
    generate->add_option("--points", gen.points, "JSON file of [x, y] points for straightline");
    generate->add_option("-o,--out", gen.out, "Output drawing file (default stdout)");
    seed_option(generate);
    generate->callback([&] {
        action = [&] {
            gen.seed = resolved_seed();
            return cmd_generate(gen);
        };
    });

    std::string input;
    std::string out;
    std::string mode = "simple";
    auto* validate_cmd = app.add_subcommand("validate", "Check a drawing file");
    validate_cmd->add_option("input", input)->required();
    validate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"simple", "generic"}));
    validate_cmd->add_option("-o,--out", out);
    validate_cmd->callback([&] { action = [&] { return cmd_validate(input, mode, out); }; });

    bool with_cells = false;
    auto* planarize_cmd = app.add_subcommand("planarize", "Summarize the arrangement of a drawing");
    planarize_cmd->add_option("input", input)->required();
    planarize_cmd->add_flag("--cells", with_cells, "List every bounded cell with its area");
    planarize_cmd->add_option("-o,--out", out);
    planarize_cmd->callback([&] { action = [&] { return cmd_planarize(input, with_cells, out); }; });

    int k = 4;
    auto* faces_cmd = app.add_subcommand("faces", "List every k-face");
    faces_cmd->add_option("input", input)->required();
    faces_cmd->add_option("--k", k)->check(CLI::Range(3, 64));
    faces_cmd->add_option("-o,--out", out);
    faces_cmd->callback([&] { action = [&] { return cmd_faces(input, k, out); }; });

    std::string trace_path;
    bool timings = false;
    auto* find4 = app.add_subcommand("find4", "Pairwise disjoint 4-faces");
    find4->add_option("input", input)->required();
    find4->add_option("--trace", trace_path, "Where to write the pipeline trace on failure");
    find4->add_flag("--timings", timings, "Include wall-clock time in the report");
    find4->add_option("-o,--out", out);
    find4->callback([&] { action = [&] { return cmd_find4(input, trace_path, timings, out); }; });

    auto* heilbronn = app.add_subcommand("heilbronn", "Smallest k-face area, k in {3, 4}");
    heilbronn->add_option("input", input)->required();
    heilbronn->add_option("--k", k)->check(CLI::IsMember({3, 4}));
    heilbronn->add_option("-o,--out", out);
    heilbronn->callback([&] { action = [&] { return cmd_heilbronn(input, k, out); }; });

    auto* z2 = app.add_subcommand("z2", "Z2 cycle experiments");
    z2->require_subcommand(1);
    std::string chain;
    std::string point;
    auto* z2_area_cmd = z2->add_subcommand("area", "Exact Z2 area of a cycle");
    z2_area_cmd->add_option("input", input)->required();
    z2_area_cmd->add_option("--chain", chain, "Edges as u-v,u-v,...")->required();
    z2_area_cmd->add_option("-o,--out", out);
    z2_area_cmd->callback([&] { action = [&] { return cmd_z2_area(input, chain, out); }; });

    auto* z2_inside = z2->add_subcommand("inside", "Z2 linking number of a point with a cycle");
    z2_inside->add_option("input", input)->required();
    z2_inside->add_option("--chain", chain)->required();
    z2_inside->add_option("--point", point, "x,y")->required();
    z2_inside->add_option("-o,--out", out);
    z2_inside->callback([&] { action = [&] { return cmd_z2_inside(input, chain, point, out); }; });

    int n = 4;
    auto* z2_enum = z2->add_subcommand("enumerate", "All nonzero Z2 cycles of K_n");
    z2_enum->add_option("--n", n)->check(CLI::Range(1, 8));
    z2_enum->add_option("-o,--out", out);
    z2_enum->callback([&] { action = [&] { return cmd_z2_enumerate(n, out); }; });

    int m = 1600;
    int trials = 20;
    int jobs = 1;
    auto* z2_sim = z2->add_subcommand("simulate", "Bit-model areas of all cycles over random trials");
    z2_sim->add_option("--n", n)->check(CLI::Range(2, 8));
    z2_sim->add_option("--m", m)->check(CLI::PositiveNumber);
    z2_sim->add_option("--trials", trials)->check(CLI::PositiveNumber);
    z2_sim->add_option("--jobs", jobs, "Worker threads across trials")->check(CLI::PositiveNumber);
    z2_sim->add_option("-o,--out", out);
    seed_option(z2_sim);
    z2_sim->callback([&] { action = [&] { return cmd_z2_simulate(n, m, trials, resolved_seed(), jobs, out); }; });

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "SVG picture of a drawing");
    render_cmd->add_option("input", render.input)->required();
    render_cmd->add_option("-o,--out", render.out, "SVG file (default stdout)");
    render_cmd->add_option("--cycle", render.cycles, "Vertex cycle to outline, e.g. 0,1,2");
    render_cmd->add_option("--fill", render.fills, "Vertex cycle whose inside is shaded");
    render_cmd->add_option("--probe", render.probes, "Point x,y to mark");
    render_cmd->add_flag("--find4", render.find4, "Shade the disjoint 4-faces of the pipeline");
    render_cmd->add_flag("--no-crossings", render.no_crossings);
    render_cmd->add_option("--width", render.width)->check(CLI::Range(100, 20000));
    render_cmd->callback([&] { action = [&] { return cmd_render(render); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidDrawing& e) {
        std::cerr << "error: invalid drawing: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegeneracyError& e) {
        std::cerr << "error: degenerate drawing: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}
