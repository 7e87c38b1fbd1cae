#pragma once

#include "topoface/drawing.hpp"

#include <string>

namespace topoface {

/// JSON drawing format:
///   {"n": 3, "vertices": [["0","0"], ...],
///    "edges": [{"u": 0, "v": 1, "polyline": [["0","0"], ["1/2","3"], ...]}, ...]}
/// Coordinates are exact "p" or "p/q" strings in lowest terms. Edges appear in
/// lexicographic (u, v) order and polyline ends repeat the vertex coordinates.
TopoDrawing parse_drawing(const std::string& text);
std::string format_drawing(const TopoDrawing& d);

/// File wrappers; ParseError also covers unreadable files.
TopoDrawing read_drawing(const std::string& path);
void write_drawing(const TopoDrawing& d, const std::string& path);

} // namespace topoface
