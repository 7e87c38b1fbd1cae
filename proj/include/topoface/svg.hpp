#pragma once

#include "topoface/arrangement.hpp"

#include <string>
#include <vector>

namespace topoface {

struct SvgOptions {
    std::vector<std::vector<VertexId>> highlight_cycles;
    std::vector<CellSet> fill_faces;
    std::vector<Point> probes;
    bool show_crossings = true;
    int width = 800;
};

/// Deterministic SVG picture of the drawing. Coordinates are printed with 9
/// significant digits; the output is for display only.
std::string render_svg(const Arrangement& arr, const SvgOptions& options = {});

} // namespace topoface
