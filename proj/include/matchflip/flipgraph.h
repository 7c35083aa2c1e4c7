#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchflip/matching.h"

namespace matchflip {

struct flip_sequence {
    plane_matching start;
    std::vector<flip_move> moves;
};

/// Limits a search to moves among a subset of points. Whitelisted edges add
/// their endpoints to the subset, so a single extra edge (a connector) can take
/// part in the search together with everything it gets flipped into.
struct search_restriction {
    std::optional<std::vector<int>> allowed_points;
    std::vector<edge> whitelisted_edges;
    std::optional<int> max_depth;
};

class resource_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 10^7 unless MATCHFLIP_NODE_CAP holds a positive integer.
std::size_t default_node_cap();

struct distance_result {
    bool reachable = false;
    int distance = -1;
    flip_sequence witness;
    std::size_t states = 0;
    bool depth_bound_hit = false;  // unreachable because max_depth ran out, not because the component was exhausted
};

/// Exact flip distance by bidirectional BFS over canonical matchings. Throws
/// resource_exhausted once more than node_cap states are stored.
distance_result flip_distance(const point_set& pts, const plane_matching& m1,
                              const plane_matching& m2, const search_restriction& r = {},
                              std::size_t node_cap = default_node_cap());

struct verify_report {
    bool ok = false;
    int failed_move = -1;  // -1 when the moves apply but the final state differs
    std::string message;
};

verify_report verify_sequence(const point_set& pts, const flip_sequence& seq,
                              const plane_matching& target);

/// ceil(x / 2) where x is the largest number of m1 edges crossing a single m2 edge.
int crossing_lower_bound(const point_set& pts, const plane_matching& m1, const plane_matching& m2);

using transition_observer =
    std::function<void(const plane_matching& before, const flip_move&, const plane_matching& after)>;

struct bounded_result {
    bool found = false;
    int length = -1;
    std::size_t transitions = 0;
};

/// Iterative deepening over the restricted flip graph. Certifies that no
/// sequence of length <= max_depth exists when found is false. The observer
/// sees every transition the search expands.
bounded_result depth_bounded_search(const point_set& pts, const plane_matching& m1,
                                    const plane_matching& m2, const search_restriction& r,
                                    int max_depth, const transition_observer& observer = {});

}  // namespace matchflip
