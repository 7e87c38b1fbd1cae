#include "topoface/drawing_io.hpp"

#include "topoface/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace topoface {

using nlohmann::json;

namespace {

Scalar coordinate(const json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where + ": coordinate must be a string");
    try {
        return parse_scalar(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Point point(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 2) throw ParseError(where + ": expected [x, y]");
    return {coordinate(value[0], where + "[0]"), coordinate(value[1], where + "[1]")};
}

int integer(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
        throw ParseError(where + ": missing integer field '" + key + "'");
    }
    return obj[key].get<int>();
}

json point_json(const Point& p) { return json::array({format_scalar(p.x), format_scalar(p.y)}); }

} // namespace

TopoDrawing parse_drawing(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    const int n = integer(doc, "n", "drawing");
    if (n < 1) throw ParseError("drawing: n must be positive");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("drawing: missing 'vertices'");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("drawing: missing 'edges'");
    const json& jv = doc["vertices"];
    if (static_cast<int>(jv.size()) != n) throw ParseError("vertices: expected " + std::to_string(n) + " entries");

    std::vector<Point> vertices;
    for (std::size_t i = 0; i < jv.size(); ++i) vertices.push_back(point(jv[i], "vertices[" + std::to_string(i) + "]"));

    const json& je = doc["edges"];
    std::vector<Polyline> edges;
    std::size_t k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            const std::string missing = "incomplete graph: missing edge " + std::to_string(u) + "-" + std::to_string(v);
            if (k >= je.size()) throw ParseError(missing);
            const std::string where = "edges[" + std::to_string(k) + "]";
            const json& edge = je[k];
            if (!edge.is_object()) throw ParseError(where + ": expected an object");
            const int eu = integer(edge, "u", where);
            const int ev = integer(edge, "v", where);
            if (eu != u || ev != v) {
                if (eu >= 0 && ev > eu && ev < n && (eu > u || (eu == u && ev > v))) throw ParseError(missing);
                throw ParseError(where + ": edges must be listed in lexicographic order with u < v");
            }
            if (!edge.contains("polyline") || !edge["polyline"].is_array()) {
                throw ParseError(where + ": missing 'polyline'");
            }
            const json& jp = edge["polyline"];
            Polyline pl;
            for (std::size_t i = 0; i < jp.size(); ++i) {
                pl.push_back(point(jp[i], where + ".polyline[" + std::to_string(i) + "]"));
            }
            if (pl.size() < 2) throw ParseError(where + ": polyline needs at least two points");
            if (pl.front() != vertices[u] || pl.back() != vertices[v]) {
                throw ParseError(where + ": polyline ends must equal the vertex coordinates");
            }
            edges.push_back(std::move(pl));
        }
    }
    if (je.size() != k) throw ParseError("edges: " + std::to_string(je.size() - k) + " extra entries");
    try {
        return TopoDrawing(std::move(vertices), std::move(edges));
    } catch (const InvalidDrawing& e) {
        throw ParseError(e.what());
    }
}

std::string format_drawing(const TopoDrawing& d) {
    json doc;
    doc["n"] = d.n();
    json vertices = json::array();
    for (const auto& p : d.vertices()) vertices.push_back(point_json(p));
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        const auto [u, v] = d.endpoints(e);
        json pl = json::array();
        for (const auto& p : d.edge(e)) pl.push_back(point_json(p));
        edges.push_back({{"u", u}, {"v", v}, {"polyline", std::move(pl)}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(1) + "\n";
}

TopoDrawing read_drawing(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_drawing(buf.str());
}

void write_drawing(const TopoDrawing& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << format_drawing(d);
    if (!out) throw Error("write failed for " + path);
}

} // namespace topoface
