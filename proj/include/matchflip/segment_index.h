#pragma once

#include <cstdint>
#include <vector>

#include "matchflip/geometry.h"

namespace matchflip {

/// Uniform grid over edge bounding boxes for repeated sightline queries
/// against one fixed edge set. Queries walk the cells a segment passes
/// through, starting at its first endpoint, so nearby blockers are found
/// first. Not safe for concurrent queries.
class segment_index {
public:
    segment_index(const std::vector<point>& pts, std::vector<edge> edges);

    /// Same answer as point_sees_point over the indexed edges.
    bool sees(int p, int q) const;

    /// Same answer as crossing_count over the indexed edges, except that the
    /// count stops once it reaches `limit`.
    int crossings(int p, int q, int limit) const;

private:
    coord col(coord x) const;
    coord row(coord y) const;

    template <class Visit>
    void walk(const point& a, const point& b, Visit&& visit) const;

    const std::vector<point>& pts_;
    std::vector<edge> edges_;
    coord min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
    coord side_ = 1, cell_w_ = 1, cell_h_ = 1;
    std::vector<std::vector<int>> cells_;
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t epoch_ = 0;
};

}  // namespace matchflip
