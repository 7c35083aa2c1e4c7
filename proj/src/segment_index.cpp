#include "matchflip/segment_index.h"

#include <algorithm>
#include <cmath>

namespace matchflip {

segment_index::segment_index(const std::vector<point>& pts, std::vector<edge> edges)
    : pts_(pts), edges_(std::move(edges)) {
    stamp_.assign(edges_.size(), 0);
    if (pts.empty()) return;
    min_x_ = max_x_ = pts[0].x;
    min_y_ = max_y_ = pts[0].y;
    for (const point& p : pts) {
        min_x_ = std::min(min_x_, p.x), max_x_ = std::max(max_x_, p.x);
        min_y_ = std::min(min_y_, p.y), max_y_ = std::max(max_y_, p.y);
    }
    side_ = std::max<coord>(1, coord(std::ceil(std::sqrt(double(edges_.size())))));
    cell_w_ = std::max<coord>(1, (max_x_ - min_x_) / side_ + 1);
    cell_h_ = std::max<coord>(1, (max_y_ - min_y_) / side_ + 1);
    cells_.assign(std::size_t(side_ * side_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const point a = pts[edges_[i].u], b = pts[edges_[i].v];
        for (coord c = col(std::min(a.x, b.x)); c <= col(std::max(a.x, b.x)); ++c)
            for (coord r = row(std::min(a.y, b.y)); r <= row(std::max(a.y, b.y)); ++r)
                cells_[std::size_t(c * side_ + r)].push_back(int(i));
    }
}

coord segment_index::col(coord x) const { return std::clamp<coord>((x - min_x_) / cell_w_, 0, side_ - 1); }
coord segment_index::row(coord y) const { return std::clamp<coord>((y - min_y_) / cell_h_, 0, side_ - 1); }

template <class Visit>
void segment_index::walk(const point& a, const point& b, Visit&& visit) const {
    if (edges_.empty()) return;
    ++epoch_;
    const coord c0 = col(a.x), c1 = col(b.x);
    const coord cstep = c1 >= c0 ? 1 : -1;
    const coord seg_r0 = row(std::min(a.y, b.y)), seg_r1 = row(std::max(a.y, b.y));
    const bool upward = b.y >= a.y;
    for (coord c = c0;; c += cstep) {
        coord r_lo = seg_r0, r_hi = seg_r1;
        if (a.x != b.x) {
            // Row range of the segment over this column, including the open
            // unit interval up to the next column, widened by one cell to
            // absorb rounding; exactness comes from segments_cross.
            const coord x_lo = std::max(min_x_ + c * cell_w_, std::min(a.x, b.x));
            const coord x_hi = std::min(min_x_ + (c + 1) * cell_w_, std::max(a.x, b.x));
            auto y_at = [&](coord x) {
                return (long double)a.y +
                       (long double)(b.y - a.y) * (long double)(x - a.x) / (long double)(b.x - a.x);
            };
            const long double y0 = y_at(x_lo), y1 = y_at(x_hi);
            r_lo = std::max(seg_r0, row(coord(std::floor(std::min(y0, y1)))) - 1);
            r_hi = std::min(seg_r1, row(coord(std::ceil(std::max(y0, y1)))) + 1);
        }
        for (coord i = 0; i <= r_hi - r_lo; ++i) {
            const coord r = upward ? r_lo + i : r_hi - i;
            for (int idx : cells_[std::size_t(c * side_ + r)]) {
                if (stamp_[idx] == epoch_) continue;
                stamp_[idx] = epoch_;
                if (visit(edges_[idx])) return;
            }
        }
        if (c == c1) break;
    }
}

bool segment_index::sees(int p, int q) const {
    if (p == q) return true;
    const point a = pts_[p], b = pts_[q];
    bool blocked = false;
    walk(a, b, [&](const edge& e) {
        blocked = segments_cross(a, b, pts_[e.u], pts_[e.v]);
        return blocked;
    });
    return !blocked;
}

int segment_index::crossings(int p, int q, int limit) const {
    const point a = pts_[p], b = pts_[q];
    int count = 0;
    walk(a, b, [&](const edge& e) {
        if (e.u == p || e.u == q || e.v == p || e.v == q) return false;
        if (segments_cross(a, b, pts_[e.u], pts_[e.v])) ++count;
        return count >= limit;
    });
    return count;
}

}  // namespace matchflip
