#include "topoface/homology.hpp"

#include "topoface/errors.hpp"
#include "topoface/generators.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace topoface {

Z2VertexChain boundary(int n, const Z2EdgeChain& z) {
    std::vector<int> degree(n, 0);
    for (EdgeId e : z) {
        if (e < 0 || e >= edge_count(n)) throw PreconditionError("edge id out of range");
        const auto [u, v] = edge_endpoints(n, e);
        ++degree.at(u);
        ++degree.at(v);
    }
    Z2VertexChain out;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] % 2 == 1) out.push_back(v);
    }
    return out;
}

bool is_cycle(int n, const Z2EdgeChain& z) { return boundary(n, z).empty(); }

Z2EdgeChain chain_sum(const Z2EdgeChain& a, const Z2EdgeChain& b) {
    Z2EdgeChain out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Z2EdgeChain parse_chain(int n, const std::string& text) {
    std::vector<char> mask(edge_count(n), 0);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dash = item.find('-');
        int u = -1;
        int v = -1;
        try {
            if (dash == std::string::npos) throw std::invalid_argument("dash");
            std::size_t used = 0;
            u = std::stoi(item.substr(0, dash), &used);
            if (used != dash) throw std::invalid_argument("u");
            v = std::stoi(item.substr(dash + 1), &used);
            if (used != item.size() - dash - 1) throw std::invalid_argument("v");
        } catch (const std::exception&) {
            throw ParseError("malformed edge '" + item + "'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("no edge '" + item + "' in K_" + std::to_string(n));
        mask[edge_index(n, u, v)] ^= 1;
    }
    Z2EdgeChain out;
    for (EdgeId e = 0; e < edge_count(n); ++e) {
        if (mask[e]) out.push_back(e);
    }
    return out;
}

std::string format_chain(int n, const Z2EdgeChain& z) {
    std::string out;
    for (EdgeId e : z) {
        const auto [u, v] = edge_endpoints(n, e);
        if (!out.empty()) out += ",";
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

std::vector<Z2EdgeChain> cycle_basis(int n) {
    std::vector<Z2EdgeChain> out;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Z2EdgeChain t{edge_index(n, 0, i), edge_index(n, 0, j), edge_index(n, i, j)};
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
        }
    }
    return out;
}

void for_each_cycle(int n, const std::function<void(const Z2EdgeChain&)>& visit) {
    const auto basis = cycle_basis(n);
    if (basis.size() > 24) throw TooLargeError("cycle space of K_" + std::to_string(n) + " is too large to enumerate");
    // Edges of K_n for n <= 8 fit in one 64-bit mask.
    std::vector<std::uint64_t> masks;
    for (const auto& b : basis) {
        std::uint64_t m = 0;
        for (EdgeId e : b) m |= std::uint64_t{1} << e;
        masks.push_back(m);
    }
    std::uint64_t current = 0;
    Z2EdgeChain chain;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t g = 1; g < total; ++g) {
        current ^= masks[std::countr_zero(g)];
        chain.clear();
        for (std::uint64_t rest = current; rest != 0; rest &= rest - 1) chain.push_back(std::countr_zero(rest));
        visit(chain);
    }
}

std::vector<Z2EdgeChain> cycle_space(int n) {
    std::vector<Z2EdgeChain> out;
    for_each_cycle(n, [&](const Z2EdgeChain& z) { out.push_back(z); });
    return out;
}

std::vector<ArcId> push_forward(const Arrangement& arr, const Z2EdgeChain& z) {
    std::vector<ArcId> out;
    for (EdgeId e : z) {
        for (ArcId a = arr.edge_arc_begin(e); a < arr.edge_arc_end(e); ++a) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArcId> cell_boundary_arcs(const Arrangement& arr, const CellSet& cells) {
    std::vector<char> in(arr.cell_count(), 0);
    for (CellId c : cells) in.at(c) = 1;
    std::vector<ArcId> out;
    for (ArcId a = 0; a < arr.arc_count(); ++a) {
        if (in[arr.cell_of(2 * a)] != in[arr.cell_of(2 * a + 1)]) out.push_back(a);
    }
    return out;
}

CellSet inside_chain(const Arrangement& arr, const Z2EdgeChain& z) {
    if (!is_cycle(arr.vertex_count(), z)) throw PreconditionError("chain is not a cycle");
    return cells_inside_edges(arr, z);
}

Scalar z2_area(const Arrangement& arr, const Z2EdgeChain& z) {
    Scalar total = 0;
    for (CellId c : inside_chain(arr, z)) total += arr.cell_area(c);
    return total;
}

bool lk2(const TopoDrawing& d, const Z2EdgeChain& z, const Point& p) {
    std::vector<const Polyline*> curves;
    for (EdgeId e : z) curves.push_back(&d.edge(e));
    return ray_parity_auto(p, curves);
}

long bit_model_area(const std::vector<std::vector<char>>& bits, const Z2EdgeChain& z) {
    if (bits.empty()) return 0;
    const std::size_t m = bits.front().size();
    long area = 0;
    for (std::size_t k = 0; k < m; ++k) {
        int parity = 0;
        for (EdgeId e : z) parity ^= bits.at(e)[k];
        area += parity;
    }
    return area;
}

RectSimulation simulate_rect_areas(int n, int m, int trials, std::uint64_t seed) {
    if (m < 0 || trials < 0) throw PreconditionError("m and trials must be non-negative");
    RectSimulation out;
    out.n = n;
    out.m = m;
    out.trials = trials;
    out.cycles = cycle_space(n);
    const std::size_t cycles = out.cycles.size();
    const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    std::vector<double> sum(cycles, 0.0);
    for (int t = 0; t < trials; ++t) {
        const auto bits = z2_rect_bits(n, m, seed + static_cast<std::uint64_t>(t));
        std::vector<std::vector<std::uint64_t>> packed(bits.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t e = 0; e < bits.size(); ++e) {
            for (int k = 0; k < m; ++k) {
                if (bits[e][k]) packed[e][k / 64] |= std::uint64_t{1} << (k % 64);
            }
        }
        long low = -1;
        std::vector<std::uint64_t> acc(words);
        for (std::size_t c = 0; c < cycles; ++c) {
            std::fill(acc.begin(), acc.end(), 0);
            for (EdgeId e : out.cycles[c]) {
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= packed[e][w];
            }
            long area = 0;
            for (std::uint64_t w : acc) area += std::popcount(w);
            sum[c] += static_cast<double>(area);
            if (3 * area < m) ++out.below_third;
            if (low < 0 || area < low) low = area;
        }
        out.min_area.push_back(low < 0 ? 0 : low);
    }
    for (std::size_t c = 0; c < cycles; ++c) out.mean_area.push_back(trials > 0 ? sum[c] / trials : 0.0);
    const double pairs = static_cast<double>(trials) * static_cast<double>(cycles);
    out.tail_frequency = pairs > 0 ? static_cast<double>(out.below_third) / pairs : 0.0;
    return out;
}

} // namespace topoface
