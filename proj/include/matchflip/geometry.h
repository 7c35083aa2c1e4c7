#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace matchflip {

using coord = std::int64_t;

/// Largest admissible |coordinate|. Differences then fit in 62 bits and every
/// 2x2 determinant fits in a signed 128-bit integer.
inline constexpr coord max_abs_coordinate = coord(1) << 60;

struct point {
    coord x = 0;
    coord y = 0;
    friend auto operator<=>(const point&, const point&) = default;
};

struct segment {
    point a;
    point b;
};

/// Unordered pair of point indices. Stored with u < v once normalized.
struct edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const edge&, const edge&) = default;
};

edge make_edge(int a, int b);

bool coordinate_in_range(const point& p);

/// Sign of (q - p) x (r - p).
int orient(const point& p, const point& q, const point& r);

/// For r collinear with pq: whether r lies on the closed segment pq.
bool on_closed_segment(const point& p, const point& q, const point& r);

/// Whether r lies on segment pq and differs from both endpoints.
bool in_segment_interior(const point& p, const point& q, const point& r);

/// True iff the two segments share a point other than a single common endpoint.
bool segments_cross(const segment& s1, const segment& s2);

/// Same predicate on raw points, avoiding segment construction in hot loops.
bool segments_cross(const point& a, const point& b, const point& c, const point& d);

/// Whether segment pq is crossed by no edge of the matching.
bool point_sees_point(std::span<const point> pts, std::span<const edge> m, int p, int q);

bool edge_sees_edge(std::span<const point> pts, std::span<const edge> m, const edge& e1,
                    const edge& e2);

/// Number of edges of m crossing s, ignoring edges that share an endpoint with s.
int crossing_count(const segment& s, std::span<const point> pts, std::span<const edge> m);

/// Index-based variant: edges incident to i or j are skipped.
int crossing_count(std::span<const point> pts, std::span<const edge> m, int i, int j);

/// Whether points are in strictly convex position (all hull vertices, no three collinear).
bool strictly_convex_position(std::span<const point> pts);

}  // namespace matchflip
