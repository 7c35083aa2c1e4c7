#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchflip/geometry.h"

namespace matchflip {

struct planar_graph_input {
    int n = 0;
    std::vector<edge> edges;
    friend bool operator==(const planar_graph_input&, const planar_graph_input&) = default;
};

/// Throws std::invalid_argument on self-loops, duplicate edges or bad indices.
void check_graph_input(const planar_graph_input& g);

struct planarity_result {
    bool planar = false;
    /// Per vertex, incident edge indices in rotation order (planar case).
    std::vector<std::vector<int>> rotation;
    /// Edge indices of a Kuratowski subgraph (nonplanar case).
    std::vector<int> certificate;
};

planarity_result planarity_test(const planar_graph_input& g);

/// Numbering with s -> 1 and t -> n where every other vertex has a lower and a higher neighbor.
/// Requires a biconnected graph containing the edge {s, t}.
std::vector<int> st_numbering(const planar_graph_input& g, int s, int t);

/// Whether number is an st-numbering of g (brute-force check).
bool is_st_numbering(const planar_graph_input& g, const std::vector<int>& number);

struct vertex_segment {
    coord y = 0;
    coord x_left = 0;
    coord x_right = 0;
};

struct edge_segment {
    coord x = 0;
    coord y_bottom = 0;
    coord y_top = 0;
    int bottom_vertex = -1;
    int top_vertex = -1;
};

struct visibility_rep {
    std::vector<vertex_segment> vertices;
    std::vector<edge_segment> edges;  // parallel to the input edge list
};

class nonplanar_graph : public std::runtime_error {
public:
    nonplanar_graph(const std::string& what, std::vector<int> certificate)
        : std::runtime_error(what), certificate(std::move(certificate)) {}
    std::vector<int> certificate;
};

/// Weak visibility representation with distinct edge columns. Components are
/// placed left to right with one empty column between them; an isolated vertex
/// gets a length-1 segment.
visibility_rep build_visibility_rep(const planar_graph_input& g);

/// Empty result means every invariant holds.
std::vector<std::string> check_visibility_rep(const planar_graph_input& g, const visibility_rep& r);

/// Inserts `count` empty rows (columns) at each position: every coordinate at or
/// beyond the position moves by count. Positions refer to the input coordinates,
/// so the order of insertions does not matter.
visibility_rep stretch(const visibility_rep& r, const std::vector<std::pair<coord, coord>>& rows,
                       const std::vector<std::pair<coord, coord>>& cols);

/// Largest coordinate span (width or height) of the representation.
coord grid_side(const visibility_rep& r);

}  // namespace matchflip
