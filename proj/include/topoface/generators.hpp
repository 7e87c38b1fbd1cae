#pragma once

#include "topoface/drawing.hpp"

#include <cstdint>
#include <vector>

namespace topoface {

/// Twisted drawing: vertex i sits at (4n^2 (i+1), 0) and edge (i, j) loops
/// around a point to the right of all vertices at a level that grows with the
/// lexicographic rank of (i, j). Edges cross iff their index pairs are nested.
/// Throws ConstructionError if the self-check fails.
TopoDrawing gen_twisted(int n);

/// Point inside every loop of gen_twisted(n); every odd face contains it.
Point twisted_probe(int n);

struct TwistedSquare {
    TopoDrawing drawing;
    Point probe;
};

/// Twisted drawing routed inside [0,1]^2 with its vertices in a corner, so
/// that every odd face has area at least 1 - eps. Cycles are verified
/// exhaustively for n <= check_limit.
TwistedSquare gen_twisted_square(int n, const Scalar& eps, int check_limit = 8);

/// Straight-line drawing of K_n on the given points. Throws
/// GeneralPositionError unless the result is a valid simple drawing.
TopoDrawing gen_straightline(const std::vector<Point>& points);

/// n points on the 2^-20 grid of the unit square in general position,
/// drawn from mt19937_64(seed).
std::vector<Point> random_points(int n, std::uint64_t seed);

TopoDrawing gen_random_straightline(int n, std::uint64_t seed);

/// Bits Y^e_k for every edge e (lexicographic order) and column k = 1..m,
/// taken from the top bit of successive mt19937_64 outputs.
std::vector<std::vector<char>> z2_rect_bits(int n, int m, std::uint64_t seed);

struct Z2RectSpec {
    int n = 2;
    int m = 1;
    std::uint64_t seed = 0;
    Scalar eta;                          // lane offset; 0 picks 1/(64 C(n,2) (m+2))
    std::vector<std::vector<char>> bits; // overrides the seeded bits when non-empty
};

struct Z2Rect {
    TopoDrawing drawing;
    std::vector<std::vector<char>> bits;
    Scalar eta;
};

/// Random rectangle drawing in [0, m+1] x [-1, 2]: edge e runs through column
/// k at height Y^e_k + (e+1) eta, descends at x = m and returns below y = 0.
/// The result is a valid generic drawing; pairs of edges may cross repeatedly.
Z2Rect gen_z2_rect(const Z2RectSpec& spec);

} // namespace topoface
