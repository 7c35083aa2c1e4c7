#pragma once

#include <optional>
#include <set>
#include <string>

#include "matchflip/reduction.h"

namespace matchflip {

struct render_options {
    /// Roles to draw; all roles when empty. Points and edges without
    /// annotations are drawn only when no filter is set.
    std::set<point_role> layers;
    /// Also draw m2 edges missing from m1, dashed.
    bool show_m2 = true;
};

/// Stroke color per role: flip structure red, blockers black, separators blue.
std::string role_color(point_role r);

/// Deterministic SVG 1.1 document. Edges and points are grouped per gadget
/// in `<g id="e3" class="edge-gadget">` / `<g id="v1" class="vertex-gadget">`
/// elements. The y axis points up as in the instance coordinates.
std::string render_svg(const reduction_instance& inst, const render_options& opt = {});

}  // namespace matchflip
