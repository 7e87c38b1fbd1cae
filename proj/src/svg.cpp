#include "topoface/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace topoface {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

class Canvas {
public:
    Canvas(const TopoDrawing& d, const std::vector<Point>& extra, int width) : width_(width) {
        const auto grow = [&](const Point& p) {
            const double x = to_double(p.x);
            const double y = to_double(p.y);
            min_x_ = std::min(min_x_, x);
            max_x_ = std::max(max_x_, x);
            min_y_ = std::min(min_y_, y);
            max_y_ = std::max(max_y_, y);
        };
        for (const auto& pl : d.edges()) std::for_each(pl.begin(), pl.end(), grow);
        for (const auto& p : d.vertices()) grow(p);
        for (const auto& p : extra) grow(p);
        const double span = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-300});
        scale_ = (width_ - 2 * kMargin) / span;
        height_ = static_cast<int>((max_y_ - min_y_) * scale_) + 2 * kMargin;
    }

    std::string x(const Point& p) const { return num((to_double(p.x) - min_x_) * scale_ + kMargin); }
    std::string y(const Point& p) const { return num((max_y_ - to_double(p.y)) * scale_ + kMargin); }

    std::string points(const Polyline& pl) const {
        std::string out;
        for (const auto& p : pl) {
            if (!out.empty()) out += ' ';
            out += x(p) + "," + y(p);
        }
        return out;
    }

    int width() const { return width_; }
    int height() const { return height_; }

private:
    static constexpr int kMargin = 20;
    int width_;
    int height_ = 0;
    double scale_ = 1;
    double min_x_ = std::numeric_limits<double>::infinity();
    double max_x_ = -std::numeric_limits<double>::infinity();
    double min_y_ = std::numeric_limits<double>::infinity();
    double max_y_ = -std::numeric_limits<double>::infinity();
};

} // namespace

std::string render_svg(const Arrangement& arr, const SvgOptions& options) {
    const TopoDrawing& d = arr.drawing();
    const Canvas c(d, options.probes, options.width);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
        << "\" viewBox=\"0 0 " << c.width() << " " << c.height() << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t f = 0; f < options.fill_faces.size(); ++f) {
        const char* colour = kPalette[f % std::size(kPalette)];
        for (CellId cell : options.fill_faces[f]) {
            out << "<polygon class=\"face\" points=\"" << c.points(arr.cell_ring(cell)) << "\" fill=\"" << colour
                << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
        }
    }
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        out << "<polyline class=\"edge\" points=\"" << c.points(d.edge(e))
            << "\" fill=\"none\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t k = 0; k < options.highlight_cycles.size(); ++k) {
        const char* colour = kPalette[k % std::size(kPalette)];
        out << "<polygon class=\"cycle\" points=\"" << c.points(cycle_ring(d, options.highlight_cycles[k]))
            << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2.5\"/>\n";
    }
    if (options.show_crossings) {
        for (NodeId v = arr.vertex_count(); v < arr.node_count(); ++v) {
            const Point p = arr.node_point(v);
            out << "<circle class=\"crossing\" cx=\"" << c.x(p) << "\" cy=\"" << c.y(p) << "\" r=\"2\" fill=\"#999\"/>\n";
        }
    }
    for (VertexId v = 0; v < d.n(); ++v) {
        const Point& p = d.vertex(v);
        out << "<circle class=\"vertex\" cx=\"" << c.x(p) << "\" cy=\"" << c.y(p) << "\" r=\"4\" fill=\"black\"/>\n";
        out << "<text x=\"" << c.x(p) << "\" y=\"" << c.y(p) << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">" << v
            << "</text>\n";
    }
    for (const auto& p : options.probes) {
        out << "<circle class=\"probe\" cx=\"" << c.x(p) << "\" cy=\"" << c.y(p)
            << "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace topoface
