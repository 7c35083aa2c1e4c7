#pragma once

// Reference implementations used only by tests. They trade speed for
// independence from the library code they check.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "matchflip/matching.h"

namespace oracle {

using matchflip::edge;
using matchflip::point;

/// Exact rational number with a positive denominator.
struct rational {
    __int128 num = 0;
    __int128 den = 1;
};

inline rational make_rational(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return {n, d};
}

inline bool operator<(const rational& a, const rational& b) { return a.num * b.den < b.num * a.den; }
inline bool operator==(const rational& a, const rational& b) { return a.num * b.den == b.num * a.den; }
inline bool operator<=(const rational& a, const rational& b) { return !(b < a); }

/// Shared point set of two segments, classified as: none, a single point
/// (returned), or infinitely many points.
enum class overlap { none, single, many };

struct shared {
    overlap kind = overlap::none;
    rational x, y;
};

inline shared intersect(point a, point b, point c, point d) {
    // a + t (b - a) = c + s (d - c), t, s in [0, 1].
    const __int128 rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    const __int128 qx = c.x - a.x, qy = c.y - a.y;
    const __int128 den = rx * sy - ry * sx;
    shared out;
    if (den != 0) {
        rational t = make_rational(qx * sy - qy * sx, den);
        rational s = make_rational(qx * ry - qy * rx, den);
        rational zero{0, 1}, one{1, 1};
        if (zero <= t && t <= one && zero <= s && s <= one) {
            out.kind = overlap::single;
            out.x = make_rational(a.x * t.den + rx * t.num, t.den);
            out.y = make_rational(a.y * t.den + ry * t.num, t.den);
        }
        return out;
    }
    if (qx * ry - qy * rx != 0) return out;  // parallel, not collinear
    // Collinear: project c and d on a + t (b - a).
    const __int128 len = rx * rx + ry * ry;
    rational tc = make_rational(qx * rx + qy * ry, len);
    rational td = make_rational((d.x - a.x) * rx + (d.y - a.y) * ry, len);
    if (td < tc) std::swap(tc, td);
    rational lo = tc < rational{0, 1} ? rational{0, 1} : tc;
    rational hi = rational{1, 1} < td ? rational{1, 1} : td;
    if (hi < lo) return out;
    if (lo == hi) {
        out.kind = overlap::single;
        out.x = make_rational(a.x * lo.den + rx * lo.num, lo.den);
        out.y = make_rational(a.y * lo.den + ry * lo.num, lo.den);
        return out;
    }
    out.kind = overlap::many;
    return out;
}

/// Reference for matchflip::segments_cross.
inline bool segments_cross(point a, point b, point c, point d) {
    shared s = intersect(a, b, c, d);
    if (s.kind == overlap::none) return false;
    if (s.kind == overlap::many) return true;
    auto is = [&](point p) { return s.x == rational{p.x, 1} && s.y == rational{p.y, 1}; };
    const bool common = (is(a) || is(b)) && (is(c) || is(d));
    if (!common) return true;
    // The shared point is an endpoint of both; a second common endpoint means
    // the segments coincide, which the single-point case cannot produce.
    return false;
}

inline bool through_point(const std::vector<point>& pts, int u, int v) {
    for (int k = 0; k < int(pts.size()); ++k) {
        if (k == u || k == v) continue;
        const point a = pts[u], b = pts[v], p = pts[k];
        const __int128 cr = __int128(b.x - a.x) * (p.y - a.y) - __int128(b.y - a.y) * (p.x - a.x);
        if (cr != 0) continue;
        if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
            p.y <= std::max(a.y, b.y))
            return true;
    }
    return false;
}

inline bool plane_perfect(const std::vector<point>& pts, const std::vector<edge>& m) {
    std::vector<int> deg(pts.size(), 0);
    for (const edge& e : m) {
        if (e.u < 0 || e.v < 0 || e.u >= int(pts.size()) || e.v >= int(pts.size()) || e.u == e.v)
            return false;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int d : deg)
        if (d != 1) return false;
    for (const edge& e : m)
        if (through_point(pts, e.u, e.v)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (oracle::segments_cross(pts[m[i].u], pts[m[i].v], pts[m[j].u], pts[m[j].v])) return false;
    return true;
}

inline std::vector<edge> normalized(std::vector<edge> m) {
    for (edge& e : m)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(m.begin(), m.end());
    return m;
}

/// Every matching one flip away from m, by re-pairing each pair of edges both
/// ways and revalidating the whole result from scratch.
inline std::set<std::vector<edge>> brute_force_flips(const std::vector<point>& pts,
                                                     const std::vector<edge>& m) {
    std::set<std::vector<edge>> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const int a = m[i].u, b = m[i].v, c = m[j].u, d = m[j].v;
            for (int w = 0; w < 2; ++w) {
                std::vector<edge> next;
                for (std::size_t z = 0; z < m.size(); ++z)
                    if (z != i && z != j) next.push_back(m[z]);
                if (w == 0) {
                    next.push_back({a, c});
                    next.push_back({b, d});
                } else {
                    next.push_back({a, d});
                    next.push_back({b, c});
                }
                if (plane_perfect(pts, next)) out.insert(normalized(next));
            }
        }
    return out;
}

/// All plane perfect matchings on pts (tiny inputs only).
inline std::vector<std::vector<edge>> all_plane_matchings(const std::vector<point>& pts) {
    std::vector<std::vector<edge>> out;
    std::vector<edge> cur;
    std::vector<char> used(pts.size(), 0);
    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int i = 0; i < int(pts.size()); ++i)
            if (!used[i]) {
                first = i;
                break;
            }
        if (first < 0) {
            if (plane_perfect(pts, cur)) out.push_back(normalized(cur));
            return;
        }
        used[first] = 1;
        for (int j = first + 1; j < int(pts.size()); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            cur.push_back({first, j});
            self(self);
            cur.pop_back();
            used[j] = 0;
        }
        used[first] = 0;
    };
    rec(rec);
    return out;
}

}  // namespace oracle
