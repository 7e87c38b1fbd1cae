#include "intersections.hpp"

#include "topoface/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <type_traits>

namespace topoface::detail {

namespace {

using i128 = __int128;

// Coordinates of the integer kernel stay below 2^30 in magnitude, so every
// orientation determinant fits in 64 bits and every comparison of two
// crossing parameters fits in 128 bits.
constexpr std::int64_t kIntBound = std::int64_t{1} << 30;

template <class T>
int sign_of(const T& v) {
    if constexpr (std::is_same_v<T, mpq_class>) {
        return sgn(v);
    } else {
        return (v > 0) - (v < 0);
    }
}

struct IntKernel {
    using Num = std::int64_t;
    using Wide = i128;
    struct Param {
        std::int64_t num;
        std::int64_t den; // > 0
    };
    static Param make_param(Wide num, Wide den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    }
    static int compare(const Param& l, const Param& r) {
        const i128 a = static_cast<i128>(l.num) * r.den;
        const i128 b = static_cast<i128>(r.num) * l.den;
        return (a > b) - (a < b);
    }
};

struct RationalKernel {
    using Num = mpq_class;
    using Wide = mpq_class;
    using Param = mpq_class;
    static Param make_param(const Wide& num, const Wide& den) { return num / den; }
    static int compare(const Param& l, const Param& r) {
        const int c = cmp(l, r);
        return (c > 0) - (c < 0);
    }
};

template <class K>
struct Seg {
    typename K::Num x0, y0, x1, y1;
    typename K::Num xlo, xhi, ylo, yhi;
    EdgeId edge;
    int index;
    bool first;
    bool last;
};

template <class K>
struct Scanner {
    using Num = typename K::Num;
    using Wide = typename K::Wide;
    using Param = typename K::Param;

    const TopoDrawing& d;
    bool stop;
    std::vector<Seg<K>> segs;
    IntersectionScan& out;
    // Maps kernel coordinates back to exact points.
    std::function<Point(const Num&, const Num&)> to_point;

    struct Entry {
        std::uint32_t crossing;
        Param param;
    };
    std::vector<std::uint32_t> entry_seg;
    std::vector<Entry> entries;

    static Wide wide(const Num& v) { return Wide(v); }

    static int orient(const Num& ax, const Num& ay, const Num& bx, const Num& by, const Num& cx,
                      const Num& cy) {
        const Wide lhs = wide(bx - ax) * wide(cy - ay);
        const Wide rhs = wide(by - ay) * wide(cx - ax);
        return sign_of<Wide>(lhs - rhs);
    }

    static bool in_box(const Num& px, const Num& py, const Seg<K>& s) {
        return s.xlo <= px && px <= s.xhi && s.ylo <= py && py <= s.yhi;
    }

    void report(EdgeId a, EdgeId b, ViolationKind kind, const Point& witness) {
        if (stop) {
            throw DegeneracyError("drawing not in general position: " + to_string(kind) + " between edges " +
                                  std::to_string(a) + " and " + std::to_string(b) + " at (" +
                                  format_scalar(witness.x) + ", " + format_scalar(witness.y) + ")");
        }
        out.issues.push_back({a, b, kind, witness});
    }

    // Vertex of the segment's edge sitting at (px, py), or -1.
    int vertex_at(const Seg<K>& s, const Num& px, const Num& py) const {
        const auto [u, v] = d.endpoints(s.edge);
        if (s.first && s.x0 == px && s.y0 == py) return u;
        if (s.last && s.x1 == px && s.y1 == py) return v;
        return -1;
    }

    void contact(const Seg<K>& a, const Seg<K>& b, const Num& px, const Num& py) {
        const int va = vertex_at(a, px, py);
        const int vb = vertex_at(b, px, py);
        if (va >= 0 && va == vb) return; // shared endpoint
        const Point w = to_point(px, py);
        if (va >= 0 || vb >= 0) {
            report(a.edge, b.edge, ViolationKind::passes_through_vertex, w);
        } else {
            report(a.edge, b.edge, ViolationKind::touching, w);
        }
    }

    void test_same_edge(const Seg<K>& a, const Seg<K>& b) {
        if (b.index == a.index + 1) {
            // Consecutive pieces share a bend; only a fold-back overlaps.
            if (orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1) == 0) {
                const Wide dp = wide(a.x1 - a.x0) * wide(b.x1 - b.x0) + wide(a.y1 - a.y0) * wide(b.y1 - b.y0);
                if (sign_of<Wide>(dp) < 0) {
                    report(a.edge, -1, ViolationKind::self_intersection, to_point(a.x1, a.y1));
                }
            }
            return;
        }
        const int o1 = orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0);
        const int o2 = orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1);
        const int o3 = orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0);
        const int o4 = orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1);
        if (o1 * o2 > 0 || o3 * o4 > 0) return;
        if (o1 == 0 && o2 == 0) {
            const bool overlap_x = !(a.xhi < b.xlo || b.xhi < a.xlo);
            const bool overlap_y = !(a.yhi < b.ylo || b.yhi < a.ylo);
            if (!(overlap_x && overlap_y)) return;
        }
        report(a.edge, -1, ViolationKind::self_intersection, to_point(a.x0, a.y0));
    }

    void test(const Seg<K>& a, const Seg<K>& b, std::uint32_t ia, std::uint32_t ib) {
        if (a.edge == b.edge) {
            test_same_edge(a, b);
            return;
        }
        const int o1 = orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0);
        const int o2 = orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1);
        const int o3 = orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0);
        const int o4 = orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1);

        if (o1 == 0 && o2 == 0) {
            const bool use_x = a.x0 != a.x1;
            const Num& alo = use_x ? a.xlo : a.ylo;
            const Num& ahi = use_x ? a.xhi : a.yhi;
            const Num& blo = use_x ? b.xlo : b.ylo;
            const Num& bhi = use_x ? b.xhi : b.yhi;
            const Num& lo = alo < blo ? blo : alo;
            const Num& hi = ahi < bhi ? ahi : bhi;
            if (hi < lo) return;
            if (lo < hi) {
                const bool a0 = (use_x ? a.x0 : a.y0) == lo;
                report(a.edge, b.edge, ViolationKind::overlap, a0 ? to_point(a.x0, a.y0) : to_point(a.x1, a.y1));
                return;
            }
            if ((use_x ? a.x0 : a.y0) == lo) {
                contact(a, b, a.x0, a.y0);
            } else {
                contact(a, b, a.x1, a.y1);
            }
            return;
        }
        if (o1 * o2 > 0 || o3 * o4 > 0) return;
        if (o1 * o2 < 0 && o3 * o4 < 0) {
            const Wide rx = wide(a.x1 - a.x0), ry = wide(a.y1 - a.y0);
            const Wide qx = wide(b.x1 - b.x0), qy = wide(b.y1 - b.y0);
            const Wide cx = wide(b.x0 - a.x0), cy = wide(b.y0 - a.y0);
            const Wide den = rx * qy - ry * qx;
            const Wide num_a = cx * qy - cy * qx;
            const Wide num_b = cx * ry - cy * rx;
            const auto id = static_cast<std::uint32_t>(out.crossings.size());
            out.crossings.push_back({ia, ib, static_cast<std::int8_t>(sign_of<Wide>(den))});
            entry_seg.push_back(ia);
            entries.push_back({id, K::make_param(num_a, den)});
            entry_seg.push_back(ib);
            entries.push_back({id, K::make_param(num_b, den)});
            return;
        }
        if (o1 == 0 && in_box(b.x0, b.y0, a)) {
            contact(a, b, b.x0, b.y0);
        } else if (o2 == 0 && in_box(b.x1, b.y1, a)) {
            contact(a, b, b.x1, b.y1);
        } else if (o3 == 0 && in_box(a.x0, a.y0, b)) {
            contact(a, b, a.x0, a.y0);
        } else if (o4 == 0 && in_box(a.x1, a.y1, b)) {
            contact(a, b, a.x1, a.y1);
        }
    }

    void run() {
        const auto s_count = static_cast<std::uint32_t>(segs.size());
        std::vector<std::uint32_t> by_x(s_count);
        std::iota(by_x.begin(), by_x.end(), 0u);
        std::sort(by_x.begin(), by_x.end(), [&](std::uint32_t l, std::uint32_t r) {
            if (segs[l].xlo < segs[r].xlo) return true;
            if (segs[r].xlo < segs[l].xlo) return false;
            return l < r;
        });
        for (std::uint32_t ii = 0; ii < s_count; ++ii) {
            const std::uint32_t i = by_x[ii];
            const Seg<K>& si = segs[i];
            for (std::uint32_t jj = ii + 1; jj < s_count; ++jj) {
                const std::uint32_t j = by_x[jj];
                const Seg<K>& sj = segs[j];
                if (si.xhi < sj.xlo) break;
                if (si.yhi < sj.ylo || sj.yhi < si.ylo) continue;
                if (i < j) {
                    test(si, sj, i, j);
                } else {
                    test(sj, si, j, i);
                }
            }
        }

        // Order crossings along every segment.
        out.order_offset.assign(s_count + 1, 0);
        for (std::uint32_t s : entry_seg) ++out.order_offset[s + 1];
        for (std::uint32_t s = 0; s < s_count; ++s) out.order_offset[s + 1] += out.order_offset[s];
        std::vector<std::uint32_t> fill(out.order_offset.begin(), out.order_offset.end() - 1);
        std::vector<std::uint32_t> slot(entries.size());
        for (std::size_t k = 0; k < entries.size(); ++k) slot[fill[entry_seg[k]]++] = static_cast<std::uint32_t>(k);
        entry_seg.clear();
        entry_seg.shrink_to_fit();
        out.order.resize(entries.size());
        for (std::uint32_t s = 0; s < s_count; ++s) {
            const auto begin = slot.begin() + out.order_offset[s];
            const auto end = slot.begin() + out.order_offset[s + 1];
            std::sort(begin, end, [&](std::uint32_t l, std::uint32_t r) {
                return K::compare(entries[l].param, entries[r].param) < 0;
            });
            for (auto it = begin; it != end; ++it) {
                if (it + 1 != end && K::compare(entries[*it].param, entries[*(it + 1)].param) == 0) {
                    const auto& c = out.crossings[entries[*it].crossing];
                    report(out.segments[c.seg_a].edge, out.segments[c.seg_b].edge,
                           ViolationKind::concurrent_crossings, crossing_point(d, out, entries[*it].crossing));
                }
                out.order[it - slot.begin()] = entries[*it].crossing;
            }
        }
    }
};

// Common denominator of all coordinates; false when the scaled values leave the integer kernel range.
bool integer_scale(const TopoDrawing& d, mpz_class& scale) {
    scale = 1;
    for (const auto& pl : d.edges()) {
        for (const auto& p : pl) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.x.get_den_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.y.get_den_mpz_t());
            if (scale >= kIntBound) return false;
        }
    }
    const mpq_class bound(mpz_class(kIntBound), scale);
    for (const auto& pl : d.edges()) {
        for (const auto& p : pl) {
            if (abs(p.x) >= bound || abs(p.y) >= bound) return false;
        }
    }
    return true;
}

template <class K>
Seg<K> make_seg(typename K::Num x0, typename K::Num y0, typename K::Num x1, typename K::Num y1, EdgeId e, int index,
                bool first, bool last) {
    Seg<K> s{x0, y0, x1, y1, {}, {}, {}, {}, e, index, first, last};
    s.xlo = x0 < x1 ? x0 : x1;
    s.xhi = x0 < x1 ? x1 : x0;
    s.ylo = y0 < y1 ? y0 : y1;
    s.yhi = y0 < y1 ? y1 : y0;
    return s;
}

} // namespace

Point crossing_point(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Point r = b - a;
    const Point q = d - c;
    const Scalar t = cross(c - a, q) / cross(r, q);
    return a + t * r;
}

Point crossing_point(const TopoDrawing& d, const IntersectionScan& scan, std::uint32_t crossing) {
    const auto& rec = scan.crossings[crossing];
    const auto& sa = scan.segments[rec.seg_a];
    const auto& sb = scan.segments[rec.seg_b];
    const auto& pa = d.edge(sa.edge);
    const auto& pb = d.edge(sb.edge);
    return crossing_point(pa[sa.index], pa[sa.index + 1], pb[sb.index], pb[sb.index + 1]);
}

IntersectionScan scan_intersections(const TopoDrawing& d, bool stop_at_first_issue) {
    IntersectionScan out;
    const int e_count = d.edge_count();
    out.edge_first_segment.resize(e_count + 1, 0);
    for (EdgeId e = 0; e < e_count; ++e) {
        out.edge_first_segment[e] = static_cast<std::uint32_t>(out.segments.size());
        const auto& pl = d.edge(e);
        for (int i = 0; i + 1 < static_cast<int>(pl.size()); ++i) out.segments.push_back({e, i});
    }
    out.edge_first_segment[e_count] = static_cast<std::uint32_t>(out.segments.size());

    mpz_class scale;
    if (integer_scale(d, scale)) {
        out.integer_kernel = true;
        Scanner<IntKernel> scanner{d, stop_at_first_issue, {}, out, {}, {}, {}};
        scanner.to_point = [scale](std::int64_t x, std::int64_t y) {
            Scalar px(mpz_class(static_cast<long>(x)), scale);
            Scalar py(mpz_class(static_cast<long>(y)), scale);
            px.canonicalize();
            py.canonicalize();
            return Point(px, py);
        };
        auto scaled = [&](const Scalar& v) {
            const mpz_class s = v.get_num() * (scale / v.get_den());
            return static_cast<std::int64_t>(s.get_si());
        };
        scanner.segs.reserve(out.segments.size());
        for (const auto& ref : out.segments) {
            const auto& pl = d.edge(ref.edge);
            const auto& p = pl[ref.index];
            const auto& q = pl[ref.index + 1];
            scanner.segs.push_back(make_seg<IntKernel>(scaled(p.x), scaled(p.y), scaled(q.x), scaled(q.y), ref.edge,
                                                       ref.index, ref.index == 0,
                                                       ref.index + 2 == static_cast<int>(pl.size())));
        }
        scanner.run();
    } else {
        Scanner<RationalKernel> scanner{d, stop_at_first_issue, {}, out, {}, {}, {}};
        scanner.to_point = [](const mpq_class& x, const mpq_class& y) { return Point(x, y); };
        scanner.segs.reserve(out.segments.size());
        for (const auto& ref : out.segments) {
            const auto& pl = d.edge(ref.edge);
            const auto& p = pl[ref.index];
            const auto& q = pl[ref.index + 1];
            scanner.segs.push_back(make_seg<RationalKernel>(p.x, p.y, q.x, q.y, ref.edge, ref.index, ref.index == 0,
                                                            ref.index + 2 == static_cast<int>(pl.size())));
        }
        scanner.run();
    }
    return out;
}

} // namespace topoface::detail
