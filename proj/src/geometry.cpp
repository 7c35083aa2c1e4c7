#include "matchflip/geometry.h"

#include <algorithm>
#include <stdexcept>

namespace matchflip {

namespace {

using wide = __int128;

}  // namespace

edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? edge{a, b} : edge{b, a};
}

bool coordinate_in_range(const point& p) {
    return p.x >= -max_abs_coordinate && p.x <= max_abs_coordinate && p.y >= -max_abs_coordinate &&
           p.y <= max_abs_coordinate;
}

int orient(const point& p, const point& q, const point& r) {
    wide v = wide(q.x - p.x) * wide(r.y - p.y) - wide(q.y - p.y) * wide(r.x - p.x);
    return (v > 0) - (v < 0);
}

bool on_closed_segment(const point& p, const point& q, const point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

bool in_segment_interior(const point& p, const point& q, const point& r) {
    return r != p && r != q && orient(p, q, r) == 0 && on_closed_segment(p, q, r);
}

bool segments_cross(const point& a, const point& b, const point& c, const point& d) {
    const bool ac = a == c, ad = a == d, bc = b == c, bd = b == d;
    const int shared = int(ac || ad) + int(bc || bd);
    if (shared == 2) return true;
    if (shared == 1) {
        const point s = (ac || ad) ? a : b;
        const point oa = (s == a) ? b : a;
        const point oc = (s == c) ? d : c;
        if (orient(s, oa, oc) != 0) return false;
        // Collinear with a shared endpoint: they overlap iff they leave s in the same direction.
        wide dot = wide(oa.x - s.x) * wide(oc.x - s.x) + wide(oa.y - s.y) * wide(oc.y - s.y);
        return dot > 0;
    }
    // Bounding boxes first; cheap and common in scans over many edges.
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return false;
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_closed_segment(a, b, c)) return true;
    if (o2 == 0 && on_closed_segment(a, b, d)) return true;
    if (o3 == 0 && on_closed_segment(c, d, a)) return true;
    if (o4 == 0 && on_closed_segment(c, d, b)) return true;
    return false;
}

bool segments_cross(const segment& s1, const segment& s2) {
    return segments_cross(s1.a, s1.b, s2.a, s2.b);
}

bool point_sees_point(std::span<const point> pts, std::span<const edge> m, int p, int q) {
    if (p == q) return true;
    const point a = pts[p], b = pts[q];
    for (const edge& e : m)
        if (segments_cross(a, b, pts[e.u], pts[e.v])) return false;
    return true;
}

bool edge_sees_edge(std::span<const point> pts, std::span<const edge> m, const edge& e1,
                    const edge& e2) {
    auto sees = [&](int a, int b) { return point_sees_point(pts, m, a, b); };
    return (sees(e1.u, e2.u) && sees(e1.v, e2.v)) || (sees(e1.u, e2.v) && sees(e1.v, e2.u));
}

int crossing_count(const segment& s, std::span<const point> pts, std::span<const edge> m) {
    int count = 0;
    for (const edge& e : m) {
        const point c = pts[e.u], d = pts[e.v];
        if (c == s.a || c == s.b || d == s.a || d == s.b) continue;
        if (segments_cross(s.a, s.b, c, d)) ++count;
    }
    return count;
}

int crossing_count(std::span<const point> pts, std::span<const edge> m, int i, int j) {
    int count = 0;
    const point a = pts[i], b = pts[j];
    for (const edge& e : m) {
        if (e.u == i || e.u == j || e.v == i || e.v == j) continue;
        if (segments_cross(a, b, pts[e.u], pts[e.v])) ++count;
    }
    return count;
}

bool strictly_convex_position(std::span<const point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
    // A point is a hull vertex iff it lies in no triangle of three others.
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (p == i || p == j || p == k) continue;
                    int o1 = orient(pts[i], pts[j], pts[p]);
                    int o2 = orient(pts[j], pts[k], pts[p]);
                    int o3 = orient(pts[k], pts[i], pts[p]);
                    if (o1 == o2 && o2 == o3) return false;
                }
    return true;
}

}  // namespace matchflip
