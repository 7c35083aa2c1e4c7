#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchflip/geometry.h"

namespace matchflip {

using point_set = std::vector<point>;

/// Perfect matching over a point set, kept in canonical form: every edge has
/// u < v and the edge list is sorted.
struct plane_matching {
    std::vector<edge> edges;
    friend auto operator<=>(const plane_matching&, const plane_matching&) = default;
};

plane_matching make_matching(std::vector<edge> edges);

struct flip_move {
    edge removed[2];
    edge added[2];
    friend bool operator==(const flip_move&, const flip_move&) = default;
};

flip_move reversed(const flip_move& f);

struct violation {
    enum class kind { index_out_of_range, unmatched, doubly_matched, crossing, through_point };
    kind what;
    edge first;
    edge second;  // only meaningful for crossings
    int index = -1;  // offending point for unmatched, doubly matched and through-point
};

std::string describe(const violation& v);

/// Empty result means the matching is a plane perfect matching on pts.
std::vector<violation> validate(const point_set& pts, const plane_matching& m);

/// Whether segment uv contains a point of pts other than u and v.
bool passes_through_point(const point_set& pts, int u, int v);

/// All flips of m. Each unordered pair of edges is tried with both re-pairings,
/// in edge order, so the output order is deterministic.
std::vector<flip_move> enumerate_flips(const point_set& pts, const plane_matching& m);

/// Checks the move against the full matching: removed edges present and
/// disjoint, added edges on the same four points, and the result plane.
bool flip_is_legal(const point_set& pts, const plane_matching& m, const flip_move& f);

/// Throws invalid_flip if the move is not legal for m.
plane_matching apply_flip(const point_set& pts, const plane_matching& m, const flip_move& f);

/// Applies without the planarity check; callers that enumerated the move already know it is legal.
plane_matching apply_flip_unchecked(const plane_matching& m, const flip_move& f);

using matching_key = std::vector<edge>;

matching_key canonical_key(const plane_matching& m);

bool contains_edge(const plane_matching& m, const edge& e);

class invalid_flip : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace matchflip
