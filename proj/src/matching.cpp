#include "matchflip/matching.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matchflip {

plane_matching make_matching(std::vector<edge> edges) {
    for (edge& e : edges) e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    return plane_matching{std::move(edges)};
}

flip_move reversed(const flip_move& f) {
    return flip_move{{f.added[0], f.added[1]}, {f.removed[0], f.removed[1]}};
}

std::string describe(const violation& v) {
    std::ostringstream out;
    switch (v.what) {
        case violation::kind::index_out_of_range:
            out << "index out of range in edge " << v.first.u << "-" << v.first.v;
            break;
        case violation::kind::unmatched:
            out << "point " << v.index << " is unmatched";
            break;
        case violation::kind::doubly_matched:
            out << "point " << v.index << " is matched more than once";
            break;
        case violation::kind::crossing:
            out << "edges " << v.first.u << "-" << v.first.v << " and " << v.second.u << "-"
                << v.second.v << " cross";
            break;
        case violation::kind::through_point:
            out << "edge " << v.first.u << "-" << v.first.v << " passes through point " << v.index;
            break;
    }
    return out.str();
}

bool passes_through_point(const point_set& pts, int u, int v) {
    const point a = pts[u], b = pts[v];
    const coord lx = std::min(a.x, b.x), hx = std::max(a.x, b.x);
    const coord ly = std::min(a.y, b.y), hy = std::max(a.y, b.y);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const point& p = pts[i];
        if (p.x < lx || p.x > hx || p.y < ly || p.y > hy) continue;
        if (int(i) == u || int(i) == v) continue;
        if (orient(a, b, p) == 0) return true;
    }
    return false;
}

namespace {

// Buckets points and edge bounding boxes into roughly 4 cells per edge.
struct bucket_grid {
    coord min_x = 0, min_y = 0;
    __int128 cell_w = 1, cell_h = 1;
    std::size_t nx = 1, ny = 1;
    std::vector<std::vector<int>> points;
    std::vector<std::vector<int>> edges;

    bucket_grid(const point_set& pts, const std::vector<edge>& es) {
        coord max_x = 0, max_y = 0;
        bool first = true;
        for (const point& p : pts) {
            if (first) { min_x = max_x = p.x; min_y = max_y = p.y; first = false; }
            min_x = std::min(min_x, p.x); max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y); max_y = std::max(max_y, p.y);
        }
        std::size_t side = 1;
        while (side * side < 4 * es.size()) ++side;
        nx = ny = side;
        cell_w = (__int128(max_x) - min_x) / __int128(side) + 1;
        cell_h = (__int128(max_y) - min_y) / __int128(side) + 1;
        points.resize(nx * ny);
        edges.resize(nx * ny);
        for (std::size_t i = 0; i < pts.size(); ++i) points[cell_of(pts[i])].push_back(int(i));
        for (std::size_t i = 0; i < es.size(); ++i)
            for_cells(pts[es[i].u], pts[es[i].v], [&](std::size_t c) { edges[c].push_back(int(i)); });
    }

    std::size_t col(coord x) const { return std::size_t((__int128(x) - min_x) / cell_w); }
    std::size_t row(coord y) const { return std::size_t((__int128(y) - min_y) / cell_h); }
    std::size_t cell_of(const point& p) const { return row(p.y) * nx + col(p.x); }

    template <class F>
    void for_cells(const point& a, const point& b, F&& f) const {
        const std::size_t c0 = col(std::min(a.x, b.x)), c1 = col(std::max(a.x, b.x));
        const std::size_t r0 = row(std::min(a.y, b.y)), r1 = row(std::max(a.y, b.y));
        for (std::size_t r = r0; r <= r1; ++r)
            for (std::size_t c = c0; c <= c1; ++c) f(r * nx + c);
    }
};

}  // namespace

std::vector<violation> validate(const point_set& pts, const plane_matching& m) {
    std::vector<violation> out;
    const int n = int(pts.size());
    std::vector<int> degree(n, 0);
    std::vector<edge> usable;
    for (const edge& e : m.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
            out.push_back({violation::kind::index_out_of_range, e, {}, -1});
            continue;
        }
        ++degree[e.u];
        ++degree[e.v];
        usable.push_back(e);
    }
    for (int i = 0; i < n; ++i) {
        if (degree[i] == 0) out.push_back({violation::kind::unmatched, {}, {}, i});
        if (degree[i] > 1) out.push_back({violation::kind::doubly_matched, {}, {}, i});
    }
    if (usable.size() < 64) {
        for (const edge& e : usable) {
            const point a = pts[e.u], b = pts[e.v];
            for (int i = 0; i < n; ++i)
                if (i != e.u && i != e.v && in_segment_interior(a, b, pts[i]))
                    out.push_back({violation::kind::through_point, e, {}, i});
        }
        for (std::size_t i = 0; i < usable.size(); ++i)
            for (std::size_t j = i + 1; j < usable.size(); ++j) {
                const edge &e = usable[i], &f = usable[j];
                if (segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v]))
                    out.push_back({violation::kind::crossing, e, f, -1});
            }
        return out;
    }
    // Large inputs: uniform grid over bounding boxes, same violations in the same order.
    const bucket_grid grid(pts, usable);
    for (std::size_t ei = 0; ei < usable.size(); ++ei) {
        const edge& e = usable[ei];
        const point a = pts[e.u], b = pts[e.v];
        std::vector<int> hits;
        grid.for_cells(a, b, [&](std::size_t cell) {
            for (int i : grid.points[cell])
                if (i != e.u && i != e.v && in_segment_interior(a, b, pts[i])) hits.push_back(i);
        });
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (int i : hits) out.push_back({violation::kind::through_point, e, {}, i});
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& bucket : grid.edges)
        for (std::size_t x = 0; x < bucket.size(); ++x)
            for (std::size_t y = x + 1; y < bucket.size(); ++y) {
                const int i = std::min(bucket[x], bucket[y]), j = std::max(bucket[x], bucket[y]);
                const edge &e = usable[i], &f = usable[j];
                if (segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])) pairs.emplace_back(i, j);
            }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [i, j] : pairs) out.push_back({violation::kind::crossing, usable[i], usable[j], -1});
    return out;
}

namespace {

// Legality of adding e3, e4 once e1 and e2 (indices skip1, skip2 in m) are removed.
bool new_edges_fit(const point_set& pts, const std::vector<edge>& m, std::size_t skip1,
                   std::size_t skip2, const edge& e3, const edge& e4) {
    const point a = pts[e3.u], b = pts[e3.v], c = pts[e4.u], d = pts[e4.v];
    if (segments_cross(a, b, c, d)) return false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == skip1 || i == skip2) continue;
        const point p = pts[m[i].u], q = pts[m[i].v];
        if (segments_cross(a, b, p, q) || segments_cross(c, d, p, q)) return false;
    }
    return !passes_through_point(pts, e3.u, e3.v) && !passes_through_point(pts, e4.u, e4.v);
}

}  // namespace

std::vector<flip_move> enumerate_flips(const point_set& pts, const plane_matching& m) {
    std::vector<flip_move> out;
    const auto& es = m.edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const int a = es[i].u, b = es[i].v, c = es[j].u, d = es[j].v;
            const edge options[2][2] = {{make_edge(a, c), make_edge(b, d)},
                                        {make_edge(a, d), make_edge(b, c)}};
            for (const auto& opt : options) {
                edge e3 = opt[0], e4 = opt[1];
                if (e4 < e3) std::swap(e3, e4);
                if (new_edges_fit(pts, es, i, j, e3, e4))
                    out.push_back(flip_move{{es[i], es[j]}, {e3, e4}});
            }
        }
    return out;
}

bool contains_edge(const plane_matching& m, const edge& e) {
    return std::binary_search(m.edges.begin(), m.edges.end(), make_edge(e.u, e.v));
}

bool flip_is_legal(const point_set& pts, const plane_matching& m, const flip_move& f) {
    const edge r1 = make_edge(f.removed[0].u, f.removed[0].v);
    const edge r2 = make_edge(f.removed[1].u, f.removed[1].v);
    const edge a1 = make_edge(f.added[0].u, f.added[0].v);
    const edge a2 = make_edge(f.added[1].u, f.added[1].v);
    const int n = int(pts.size());
    for (const edge& e : {r1, r2, a1, a2})
        if (e.u < 0 || e.v >= n) return false;
    std::vector<int> before{r1.u, r1.v, r2.u, r2.v}, after{a1.u, a1.v, a2.u, a2.v};
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (std::adjacent_find(before.begin(), before.end()) != before.end()) return false;
    if (before != after) return false;
    if ((a1 == r1 && a2 == r2) || (a1 == r2 && a2 == r1)) return false;
    auto it1 = std::lower_bound(m.edges.begin(), m.edges.end(), r1);
    auto it2 = std::lower_bound(m.edges.begin(), m.edges.end(), r2);
    if (it1 == m.edges.end() || *it1 != r1 || it2 == m.edges.end() || *it2 != r2) return false;
    return new_edges_fit(pts, m.edges, std::size_t(it1 - m.edges.begin()),
                         std::size_t(it2 - m.edges.begin()), a1, a2);
}

plane_matching apply_flip_unchecked(const plane_matching& m, const flip_move& f) {
    const edge r1 = make_edge(f.removed[0].u, f.removed[0].v);
    const edge r2 = make_edge(f.removed[1].u, f.removed[1].v);
    plane_matching out;
    out.edges.reserve(m.edges.size());
    for (const edge& e : m.edges)
        if (e != r1 && e != r2) out.edges.push_back(e);
    out.edges.push_back(make_edge(f.added[0].u, f.added[0].v));
    out.edges.push_back(make_edge(f.added[1].u, f.added[1].v));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

plane_matching apply_flip(const point_set& pts, const plane_matching& m, const flip_move& f) {
    if (!flip_is_legal(pts, m, f)) {
        std::ostringstream msg;
        msg << "flip " << f.removed[0].u << "-" << f.removed[0].v << "," << f.removed[1].u << "-"
            << f.removed[1].v << " -> " << f.added[0].u << "-" << f.added[0].v << ","
            << f.added[1].u << "-" << f.added[1].v << " is not applicable";
        throw invalid_flip(msg.str());
    }
    return apply_flip_unchecked(m, f);
}

matching_key canonical_key(const plane_matching& m) {
    matching_key k = m.edges;
    for (edge& e : k) e = make_edge(e.u, e.v);
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace matchflip
