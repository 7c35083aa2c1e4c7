#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchflip/matching.h"

namespace matchflip {

/// Miniature gadgets keep the flip structure and blockers but use two
/// separator edges per side, so exhaustive searches inside one gadget stay small.
enum class gadget_scale { full, miniature };

/// Template coordinates of the flip structure and of the first blocker. All
/// other blockers are quarter-turn rotations of the first one about the origin.
namespace gadget_template {

/// Outer points f0..f3 clockwise, f0 topmost.
const std::array<point, 4>& outer_points();
/// Inner points f'0..f'3.
const std::array<point, 4>& inner_points();
/// Eleven parallel edges of blocker 0 ordered from the innermost to the
/// outermost one. The first point of each edge is its upper-left end.
const std::array<segment, 11>& blocker_edges();

/// Quarter turn clockwise: (x, y) -> (y, -x).
point rotate(const point& p, int quarter_turns);

/// |x| and |y| of the outer points.
inline constexpr coord outer_extent = 640;
/// |x| and |y| of the inner points.
inline constexpr coord inner_extent = 160;

}  // namespace gadget_template

/// Indices of the eight flip-structure points in some point set.
struct flip_structure {
    std::array<int, 4> outer{};  // f0..f3
    std::array<int, 4> inner{};  // f'0..f'3

    /// f_i f'_i
    std::array<edge, 4> start_edges() const;
    /// f_i f'_{i-1}
    std::array<edge, 4> final_edges() const;
};

/// Number of final edges in m minus the number of start edges in m.
int weight(const plane_matching& m, const flip_structure& fs);

enum class configuration { start, final, other };

configuration classify_configuration(const plane_matching& m, const flip_structure& fs);

/// Separator edges per side for a budget k.
int separator_count(int k, gadget_scale scale);

/// Horizontal template scale needed so that every separator stays within the
/// tolerance band beside the flip structure.
coord min_x_scale(int separator_count);

/// Placement of one edge gadget: template point p maps to
/// (center.x + x_scale * p.x, center.y + y_scale * p.y).
struct edge_gadget_slot {
    point center;
    coord x_scale = 1;
    coord y_scale = 1;
    /// y of the lower and upper separator endpoints; the innermost edges reach one unit further.
    coord separator_bottom = 0;
    coord separator_top = 0;
};

/// A slot centered at the origin with the default vertical scale and clearance.
edge_gadget_slot isolated_edge_slot(int k, gadget_scale scale);

struct edge_gadget {
    flip_structure flip;
    std::array<std::array<edge, 11>, 4> blockers{};  // blocker b, edges innermost first
    std::vector<edge> sep_left;                      // innermost first
    std::vector<edge> sep_right;
    point center;
    coord x_scale = 1;
    coord y_scale = 1;

    /// Start edges, blockers and separators.
    std::vector<edge> start_matching_edges() const;
};

class gadget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One executable invariant of a gadget. Informational checks are reported but
/// do not fail construction.
struct gadget_check {
    std::string name;
    bool passed = false;
    bool enforced = true;
    std::string detail;
};

/// Appends the gadget's points to pts in a fixed order: f0..f3, f'0..f'3, the
/// blocker edges (blocker by blocker, innermost edge first, upper-left end
/// first), then the left and right separator edges (innermost first, bottom
/// end first). Every enforced invariant is checked; a failure throws gadget_error.
edge_gadget build_edge_gadget(const edge_gadget_slot& slot, int k, gadget_scale scale, point_set& pts);

/// Invariant checks of one edge gadget, evaluated on its own edges only.
std::vector<gadget_check> check_edge_gadget(const point_set& pts, const edge_gadget& g);

/// Integer sizes that drive the placement of all gadgets for a budget k.
struct layout_params {
    int separators = 0;         // edges per separator side (and per vertex-separator group)
    coord x_scale = 1;          // horizontal template scale of every edge gadget
    coord gadget_half_width = 0;  // center to the outermost separator
    coord gap = 0;              // frame to the nearest separator end
    coord frame_height = 0;     // bottom-edge to top-edge
    coord frame_margin = 0;     // frame overhang past the outermost incident gadget
    coord band_clearance = 0;   // horizontal distance from a band end to the nearest gadget
    coord band_reach = 0;       // how far bands stick out past the vertical separator group
    coord row_pitch = 0;
    coord column_pitch = 0;
};

layout_params make_layout_params(int k, gadget_scale scale = gadget_scale::full);

/// Vertical template scale below which separator clearances cannot be met.
inline constexpr coord min_y_scale = 30;

/// Fits an edge gadget between two frames: the separators span
/// [separator_bottom, separator_top] and the flip structure sits in the middle.
edge_gadget_slot fit_edge_slot(coord center_x, coord separator_bottom, coord separator_top,
                               const layout_params& lp);

struct incident_gadget {
    int owner = -1;    // caller's id of the edge gadget
    coord center_x = 0;
    bool above = false;  // gadget lies above the frame
};

struct vertex_slot {
    coord x_left = 0;   // frame ends
    coord x_right = 0;
    coord y_bottom = 0;  // bottom-edge; the top-edge is frame_height higher
};

struct connector {
    int owner = -1;
    bool above = false;
    int channel_point = -1;  // below the gadget's center (above for gadgets below the frame)
    int partner_point = -1;  // below f1 (above f3 for gadgets below the frame)
    edge e;
};

struct vertex_gadget {
    edge bottom;
    edge top;
    std::vector<edge> middle;  // bottom to top
    std::vector<connector> connectors;
    /// Vertex separators: vertical edges nearest the frame first, horizontal
    /// edges nearest the vertical ones first.
    std::vector<edge> left_vertical, left_above, left_below;
    std::vector<edge> right_vertical, right_above, right_below;
    coord x_left = 0, x_right = 0, y_bottom = 0, y_top = 0;

    std::vector<edge> all_edges() const;
    std::vector<edge> separator_edges() const;
};

/// Appends the frame, the connectors and both vertex separators. Points are
/// ordered: bottom-edge, top-edge, middle edges, connectors (gadgets below the
/// frame left to right, then gadgets above left to right; channel point
/// first), then left vertical, left above, left below, right vertical, right
/// above, right below.
vertex_gadget build_vertex_gadget(const vertex_slot& slot, std::vector<incident_gadget> incident,
                                  const layout_params& lp, point_set& pts);

std::vector<gadget_check> check_vertex_gadget(const point_set& pts, const vertex_gadget& g,
                                              const layout_params& lp);

/// The flip that replaces top- and bottom-edge by the two vertical end edges.
flip_move activation_move(const vertex_gadget& g);

}  // namespace matchflip
