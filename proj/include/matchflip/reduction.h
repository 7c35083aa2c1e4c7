#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchflip/flipgraph.h"
#include "matchflip/gadgets.h"
#include "matchflip/visibility.h"

namespace matchflip {

enum class point_role { flip_structure, blocker, separator, frame, connector, vertex_separator };

std::string role_name(point_role r);
/// Inverse of role_name; empty for unknown names.
std::optional<point_role> parse_role(const std::string& name);

struct owner_ref {
    bool is_vertex = false;
    int id = -1;
    friend auto operator<=>(const owner_ref&, const owner_ref&) = default;
};

/// "v3" or "e5".
std::string owner_name(const owner_ref& o);
std::optional<owner_ref> parse_owner(const std::string& name);

struct annotation {
    point_role role = point_role::frame;
    owner_ref owner;
    friend bool operator==(const annotation&, const annotation&) = default;
};

struct reduction_instance {
    point_set points;
    plane_matching m1;
    plane_matching m2;
    int k = 0;
    std::vector<annotation> annotations;  // parallel to points, or empty
    std::vector<int> dropped_vertices;    // isolated vertices of the source graph
    friend bool operator==(const reduction_instance&, const reduction_instance&) = default;
};

struct edge_gadget_record {
    int edge_id = -1;
    int lower_vertex = -1;
    int upper_vertex = -1;
    edge_gadget gadget;
};

struct vertex_gadget_record {
    int vertex = -1;
    vertex_gadget gadget;
};

struct instance_layout {
    layout_params params;
    std::vector<edge_gadget_record> edges;      // ordered by edge id
    std::vector<vertex_gadget_record> vertices;  // ordered by vertex id

    const edge_gadget_record* find_edge(int id) const;
    const vertex_gadget_record* find_vertex(int id) const;
};

class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rebuilds gadget structure from the annotations and the frozen point order.
/// Throws std::invalid_argument if the annotations do not describe gadgets.
instance_layout recover_layout(const reduction_instance& inst);

/// Builds the instance for the planar graph g and cover budget c, with
/// k = 2c + 5|E|. Edge gadgets come first (by edge id), then vertex gadgets
/// (by vertex id). Vertices without edges get no gadget and are listed in
/// dropped_vertices. Throws nonplanar_graph for nonplanar input.
reduction_instance reduce(const planar_graph_input& g, int c);

/// Top- and bottom-edge present.
bool frame_deactivated(const plane_matching& m, const vertex_gadget& g);

flip_move activate(const instance_layout& layout, int vertex, const plane_matching& current);
flip_move deactivate(const instance_layout& layout, int vertex, const plane_matching& current);

/// Which vertex gadget's connector drives the transformation of an edge gadget.
enum class gadget_side { below, above };

/// The five flips that move an edge gadget from start to final configuration
/// through one connector. Checks each move against `current` and throws
/// precondition_error if the frame is not activated, the gadget is not in
/// start configuration or a move is illegal.
std::vector<flip_move> five_flip_sequence(const reduction_instance& inst, const instance_layout& layout,
                                          int edge_id, gadget_side side, const plane_matching& current);

/// Witness: activate every cover vertex, transform every edge gadget
/// through a connector of a covering endpoint, deactivate. Length is exactly
/// 2|cover| + 5|E|.
flip_sequence witness_sequence(const reduction_instance& inst, const std::vector<int>& cover);

struct audit_record {
    std::string check;
    std::string gadget;
    std::string expected;
    std::string observed;
    bool passed = false;
};

struct audit_report {
    std::vector<audit_record> records;
    bool passed() const;
};

/// Instance-wide checks of the geometric premises, see README for the list.
audit_report audit(const reduction_instance& inst);

bool is_vertex_cover(const planar_graph_input& g, const std::vector<int>& cover);

/// Minimum vertex cover if its size is at most c. Exact branch and bound;
/// throws resource_exhausted for more than 24 vertices.
std::optional<std::vector<int>> solve_vertex_cover(const planar_graph_input& g, int c);

/// Documented polynomial bounds on the size of reduce(g, c).
struct instance_bounds {
    std::int64_t max_points = 0;
    long double max_area = 0;
    std::int64_t max_abs_coordinate = 0;
};

instance_bounds bounds_for(int vertices, int edges, int k);

struct bounding_box {
    coord min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    long double area() const { return (long double)(max_x - min_x) * (long double)(max_y - min_y); }
};

bounding_box bbox(const point_set& pts);

}  // namespace matchflip
