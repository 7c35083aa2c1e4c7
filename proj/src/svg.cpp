#include "matchflip/svg.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace matchflip {

std::string role_color(point_role r) {
    switch (r) {
        case point_role::flip_structure: return "#d62728";
        case point_role::blocker: return "#000000";
        case point_role::separator: return "#1f4fd6";
        case point_role::frame: return "#7f7f7f";
        case point_role::connector: return "#2ca02c";
        case point_role::vertex_separator: return "#17becf";
    }
    return "#000000";
}

namespace {

// Edges are drawn in the role and group of their lower-index endpoint.
std::optional<annotation> note_of(const reduction_instance& inst, int p) {
    if (inst.annotations.size() != inst.points.size() || p < 0 || std::size_t(p) >= inst.points.size())
        return std::nullopt;
    return inst.annotations[p];
}

}  // namespace

std::string render_svg(const reduction_instance& inst, const render_options& opt) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
    if (inst.points.empty()) {
        out << " width=\"100\" height=\"100\" viewBox=\"0 0 100 100\">\n</svg>\n";
        return out.str();
    }
    const bounding_box b = bbox(inst.points);
    const coord extent = std::max<coord>({b.max_x - b.min_x, b.max_y - b.min_y, 1});
    const coord margin = std::max<coord>(1, extent / 50);
    const coord stroke = std::max<coord>(1, extent / 4000);
    const coord radius = std::max<coord>(1, extent / 2500);
    const coord w = b.max_x - b.min_x + 2 * margin, h = b.max_y - b.min_y + 2 * margin;
    const coord px_w = 1000, px_h = std::max<coord>(1, coord((long double)h * 1000 / (long double)w));
    out << " width=\"" << px_w << "\" height=\"" << px_h << "\" viewBox=\"" << b.min_x - margin << ' '
        << -(b.max_y + margin) << ' ' << w << ' ' << h << "\">\n";

    auto visible = [&](const std::optional<annotation>& a) {
        if (opt.layers.empty()) return true;
        return a && opt.layers.count(a->role) > 0;
    };
    // Group key: annotated owner, or a shared bucket for unannotated items.
    std::map<std::string, std::ostringstream> groups;
    auto group_of = [&](const std::optional<annotation>& a) -> std::ostringstream& {
        return groups[a ? owner_name(a->owner) : std::string()];
    };
    auto line = [&](const edge& e, bool dashed) {
        const auto a = note_of(inst, e.u);
        if (!visible(a)) return;
        const point p = inst.points[e.u], q = inst.points[e.v];
        group_of(a) << "<line x1=\"" << p.x << "\" y1=\"" << -p.y << "\" x2=\"" << q.x << "\" y2=\"" << -q.y
                    << "\" stroke=\"" << (a ? role_color(a->role) : "#000000") << "\" stroke-width=\"" << stroke
                    << '"' << (dashed ? " stroke-dasharray=\"" + std::to_string(4 * stroke) + "\"" : "") << "/>\n";
    };
    for (const edge& e : inst.m1.edges) line(e, false);
    if (opt.show_m2)
        for (const edge& e : inst.m2.edges)
            if (!contains_edge(inst.m1, e)) line(e, true);
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        const auto a = note_of(inst, int(i));
        if (!visible(a)) continue;
        const point p = inst.points[i];
        group_of(a) << "<circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\"" << radius << "\" fill=\""
                    << (a ? role_color(a->role) : "#000000") << "\"/>\n";
    }
    for (auto& [key, body] : groups) {
        if (key.empty()) {
            out << "<g>\n" << body.str() << "</g>\n";
            continue;
        }
        const bool vertex = key[0] == 'v';
        out << "<g id=\"" << key << "\" class=\"" << (vertex ? "vertex-gadget" : "edge-gadget") << "\">\n"
            << body.str() << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace matchflip
