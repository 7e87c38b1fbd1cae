#pragma once

#include "topoface/arrangement.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace topoface {

/// Edge set of K_n over Z2, ascending edge ids.
using Z2EdgeChain = std::vector<EdgeId>;
/// Vertex set over Z2, ascending.
using Z2VertexChain = std::vector<VertexId>;

/// Vertices of odd degree in z.
Z2VertexChain boundary(int n, const Z2EdgeChain& z);
bool is_cycle(int n, const Z2EdgeChain& z);
Z2EdgeChain chain_sum(const Z2EdgeChain& a, const Z2EdgeChain& b);

/// Parses "0-1,1-2,2-0" (edges may repeat; they cancel in pairs).
Z2EdgeChain parse_chain(int n, const std::string& text);
std::string format_chain(int n, const Z2EdgeChain& z);

/// Fundamental cycles of the star at vertex 0: the triangles {0, i, j}.
std::vector<Z2EdgeChain> cycle_basis(int n);

/// Calls visit on every nonzero cycle of K_n in Gray-code order of the basis
/// coefficients. TooLargeError unless C(n-1, 2) <= 24.
void for_each_cycle(int n, const std::function<void(const Z2EdgeChain&)>& visit);
std::vector<Z2EdgeChain> cycle_space(int n);

/// Arcs of the arrangement lying on edges of z.
std::vector<ArcId> push_forward(const Arrangement& arr, const Z2EdgeChain& z);

/// Arcs with exactly one side in the cell set.
std::vector<ArcId> cell_boundary_arcs(const Arrangement& arr, const CellSet& cells);

/// The unique cell set whose boundary is push_forward(z).
/// PreconditionError if z is not a cycle.
CellSet inside_chain(const Arrangement& arr, const Z2EdgeChain& z);

Scalar z2_area(const Arrangement& arr, const Z2EdgeChain& z);

/// Parity of crossings of a generic ray from p with the edges of z.
bool lk2(const TopoDrawing& d, const Z2EdgeChain& z, const Point& p);

struct RectSimulation {
    int n = 0;
    int m = 0;
    int trials = 0;
    std::vector<Z2EdgeChain> cycles;
    std::vector<double> mean_area;           // per cycle, over trials
    std::vector<long> min_area;              // per trial, over cycles
    long below_third = 0;                    // (trial, cycle) pairs with area < m/3
    double tail_frequency = 0;               // below_third / (trials * cycles)
};

/// Bit-model areas: trial t draws z2_rect_bits(n, m, seed + t) and sets
/// area(z) to the number of columns k with odd XOR of Y^e_k over e in z.
RectSimulation simulate_rect_areas(int n, int m, int trials, std::uint64_t seed);

/// Bit-model area of a single cycle for given bits.
long bit_model_area(const std::vector<std::vector<char>>& bits, const Z2EdgeChain& z);

} // namespace topoface
