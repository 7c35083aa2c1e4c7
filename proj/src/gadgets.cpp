#include "matchflip/gadgets.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace matchflip {

namespace gadget_template {

const std::array<point, 4>& outer_points() {
    static const std::array<point, 4> pts{{{320, 640}, {640, -320}, {-320, -640}, {-640, 320}}};
    return pts;
}

const std::array<point, 4>& inner_points() {
    static const std::array<point, 4> pts{{{160, -160}, {-160, -160}, {-160, 160}, {160, 160}}};
    return pts;
}

const std::array<segment, 11>& blocker_edges() {
    static const std::array<segment, 11> edges{{
        {{276, 404}, {390, 290}},
        {{280, 424}, {420, 284}},
        {{285, 443}, {446, 282}},
        {{291, 461}, {468, 284}},
        {{298, 478}, {486, 290}},
        {{306, 494}, {500, 300}},
        {{315, 509}, {510, 314}},
        {{325, 523}, {516, 332}},
        {{336, 536}, {518, 354}},
        {{356, 540}, {516, 380}},
        {{380, 540}, {510, 410}},
    }};
    return edges;
}

point rotate(const point& p, int quarter_turns) {
    point q = p;
    for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) q = point{q.y, -q.x};
    return q;
}

}  // namespace gadget_template

namespace {

namespace tpl = gadget_template;

coord ceil_div(coord a, coord b) { return (a + b - 1) / b; }

// Labels inside one blocker: b_j is edge j-1, c is edge 5, a_j is edge 11-j.
constexpr int c_edge = 5;
int a_edge(int j) { return 11 - j; }
int b_edge(int j) { return j - 1; }

bool strictly_inside_simple(const std::array<point, 4>& poly, const point& p) {
    // Winding number with exact orientation tests; boundary points count as outside.
    int winding = 0;
    for (int i = 0; i < 4; ++i) {
        const point a = poly[i], b = poly[(i + 1) % 4];
        if (orient(a, b, p) == 0 && on_closed_segment(a, b, p)) return false;
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++winding;
        } else if (b.y <= p.y && orient(a, b, p) < 0) {
            --winding;
        }
    }
    return winding != 0;
}

bool simple_quadrilateral(const std::array<point, 4>& q) {
    for (int i = 0; i < 4; ++i) {
        // Adjacent sides may only meet at their shared corner.
        if (segments_cross(q[i], q[(i + 1) % 4], q[(i + 1) % 4], q[(i + 2) % 4])) return false;
    }
    return !segments_cross(q[0], q[1], q[2], q[3]) && !segments_cross(q[1], q[2], q[3], q[0]);
}

point to_template(const edge_gadget& g, const point& p) {
    const coord dx = p.x - g.center.x, dy = p.y - g.center.y;
    if (dx % g.x_scale != 0 || dy % g.y_scale != 0) return point{max_abs_coordinate, max_abs_coordinate};
    return point{dx / g.x_scale, dy / g.y_scale};
}

struct check_list {
    std::vector<gadget_check> out;
    void add(std::string name, bool ok, std::string detail = {}, bool enforced = true) {
        out.push_back({std::move(name), ok, enforced, std::move(detail)});
    }
};

}  // namespace

std::array<edge, 4> flip_structure::start_edges() const {
    std::array<edge, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = make_edge(outer[i], inner[i]);
    return r;
}

std::array<edge, 4> flip_structure::final_edges() const {
    std::array<edge, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = make_edge(outer[i], inner[(i + 3) % 4]);
    return r;
}

int weight(const plane_matching& m, const flip_structure& fs) {
    int w = 0;
    for (const edge& e : fs.final_edges()) w += contains_edge(m, e) ? 1 : 0;
    for (const edge& e : fs.start_edges()) w -= contains_edge(m, e) ? 1 : 0;
    return w;
}

configuration classify_configuration(const plane_matching& m, const flip_structure& fs) {
    auto all_in = [&](const std::array<edge, 4>& es) {
        return std::all_of(es.begin(), es.end(), [&](const edge& e) { return contains_edge(m, e); });
    };
    if (all_in(fs.start_edges())) return configuration::start;
    if (all_in(fs.final_edges())) return configuration::final;
    return configuration::other;
}

int separator_count(int k, gadget_scale scale) {
    if (k < 0) throw std::invalid_argument("negative flip budget");
    return scale == gadget_scale::miniature ? 2 : 2 * k + 2;
}

coord min_x_scale(int separator_count) { return std::max<coord>(1, ceil_div(separator_count, 42)); }

std::vector<edge> edge_gadget::start_matching_edges() const {
    std::vector<edge> out;
    for (const edge& e : flip.start_edges()) out.push_back(e);
    for (const auto& b : blockers) out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), sep_left.begin(), sep_left.end());
    out.insert(out.end(), sep_right.begin(), sep_right.end());
    return out;
}

layout_params make_layout_params(int k, gadget_scale scale) {
    layout_params lp;
    const coord s = separator_count(k, scale);
    lp.separators = int(s);
    lp.x_scale = min_x_scale(int(s));
    lp.gadget_half_width = tpl::outer_extent * lp.x_scale + s;
    lp.gap = 2 * s + 8;
    lp.frame_height = s + 3;
    // Sightlines that leave a gadget between its separators and a frame drop at
    // least min_clearance over the gadget width; margins are sized from that slope.
    const coord min_clearance = 10 * min_y_scale;
    const coord width = 2 * tpl::outer_extent * lp.x_scale + 2 * s + 2;
    lp.band_clearance = ceil_div((s + 6) * width, min_clearance) + 2;
    lp.frame_margin =
        2 * ceil_div((lp.gap + lp.frame_height + 2) * width, min_clearance) + lp.band_clearance;
    lp.band_reach = 2 * ceil_div((lp.gap + s) * width, min_clearance) + s;
    lp.column_pitch =
        2 * (lp.gadget_half_width + lp.frame_margin + s + 1 + lp.band_reach) + lp.gap;
    lp.row_pitch = 39000 + lp.frame_height + 2 * lp.gap;
    return lp;
}

edge_gadget_slot fit_edge_slot(coord center_x, coord separator_bottom, coord separator_top,
                               const layout_params& lp) {
    const coord span = separator_top - separator_bottom;
    // Split the span into 1280 units of flip structure plus 10..32 units of clearance per side.
    const coord y_scale = span / 1300;
    if (y_scale < min_y_scale) throw gadget_error("edge gadget slot too short");
    const coord rest = span - 2 * tpl::outer_extent * y_scale;
    edge_gadget_slot slot;
    slot.center = point{center_x, separator_bottom + rest / 2 + tpl::outer_extent * y_scale};
    slot.x_scale = lp.x_scale;
    slot.y_scale = y_scale;
    slot.separator_bottom = separator_bottom;
    slot.separator_top = separator_top;
    return slot;
}

edge_gadget_slot isolated_edge_slot(int k, gadget_scale scale) {
    return fit_edge_slot(0, -19500, 19500, make_layout_params(k, scale));
}

edge_gadget build_edge_gadget(const edge_gadget_slot& slot, int k, gadget_scale scale, point_set& pts) {
    const int s = separator_count(k, scale);
    if (slot.x_scale < min_x_scale(s)) throw gadget_error("x scale too small for the separator count");
    if (slot.y_scale < 1) throw gadget_error("y scale must be positive");
    edge_gadget g;
    g.center = slot.center;
    g.x_scale = slot.x_scale;
    g.y_scale = slot.y_scale;
    auto place = [&](const point& t) {
        pts.push_back(point{slot.center.x + slot.x_scale * t.x, slot.center.y + slot.y_scale * t.y});
        return int(pts.size()) - 1;
    };
    for (int i = 0; i < 4; ++i) g.flip.outer[i] = place(tpl::outer_points()[i]);
    for (int i = 0; i < 4; ++i) g.flip.inner[i] = place(tpl::inner_points()[i]);
    for (int b = 0; b < 4; ++b)
        for (int j = 0; j < 11; ++j) {
            const segment& e = tpl::blocker_edges()[j];
            const int u = place(tpl::rotate(e.a, b));
            const int v = place(tpl::rotate(e.b, b));
            g.blockers[b][j] = make_edge(u, v);
        }
    const coord inner_x = tpl::outer_extent * slot.x_scale + 1;
    for (int side = 0; side < 2; ++side) {
        auto& sep = side == 0 ? g.sep_left : g.sep_right;
        for (int j = 0; j < s; ++j) {
            const coord x = side == 0 ? slot.center.x - inner_x - j : slot.center.x + inner_x + j;
            const coord ext = j == 0 ? 1 : 0;
            pts.push_back(point{x, slot.separator_bottom - ext});
            pts.push_back(point{x, slot.separator_top + ext});
            sep.push_back(make_edge(int(pts.size()) - 2, int(pts.size()) - 1));
        }
    }
    for (const gadget_check& c : check_edge_gadget(pts, g))
        if (c.enforced && !c.passed)
            throw gadget_error("edge gadget invariant violated: " + c.name +
                               (c.detail.empty() ? "" : " (" + c.detail + ")"));
    return g;
}

std::vector<gadget_check> check_edge_gadget(const point_set& pts, const edge_gadget& g) {
    check_list cl;
    const std::vector<edge> own = g.start_matching_edges();
    const auto& f = g.flip.outer;
    const auto& fp = g.flip.inner;
    const std::array<edge, 4> start = g.flip.start_edges();
    const std::vector<edge> fs_only(start.begin(), start.end());
    std::vector<edge> blockers;
    for (const auto& b : g.blockers) blockers.insert(blockers.end(), b.begin(), b.end());

    {
        std::set<point> distinct;
        for (int i = 0; i < 4; ++i) distinct.insert({pts[f[i]], pts[fp[i]]});
        cl.add("flip structure has eight distinct points", distinct.size() == 8);
        bool placed = true;
        for (int i = 0; i < 4; ++i) {
            placed = placed && to_template(g, pts[f[i]]) == tpl::outer_points()[i];
            placed = placed && to_template(g, pts[fp[i]]) == tpl::inner_points()[i];
        }
        cl.add("flip structure sits at its template position", placed);
    }
    {
        bool top = true, clockwise = true;
        for (int i = 1; i < 8; ++i) top = top && pts[i < 4 ? f[i] : fp[i - 4]].y < pts[f[0]].y;
        for (int i = 0; i < 4; ++i) clockwise = clockwise && orient(pts[f[i]], pts[f[(i + 1) % 4]], pts[f[(i + 2) % 4]]) < 0;
        cl.add("f0 topmost and outer points clockwise", top && clockwise);
    }
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            ok = ok && point_sees_point(pts, fs_only, f[i], fp[(i + 3) % 4]);
            ok = ok && !point_sees_point(pts, fs_only, f[i], fp[(i + 1) % 4]);
            ok = ok && !point_sees_point(pts, fs_only, f[i], fp[(i + 2) % 4]);
        }
        cl.add("f_i sees f'_{i-1} but not f'_{i+1}, f'_{i+2}", ok);
    }
    {
        // Flipping start edges f_i f'_i and f_{i+1} f'_{i+1} into final edge
        // f_{i+1} f'_i closes the 4-gon f_i f'_i f_{i+1} f'_{i+1}.
        bool ok = true;
        std::ostringstream detail;
        for (int i = 0; i < 4; ++i) {
            const int j = (i + 1) % 4;
            const std::array<point, 4> q{pts[f[i]], pts[fp[i]], pts[f[j]], pts[fp[j]]};
            if (!simple_quadrilateral(q)) continue;
            int inside = 0;
            for (int t = 0; t < 4; ++t) inside += strictly_inside_simple(q, pts[f[t]]) + strictly_inside_simple(q, pts[fp[t]]);
            if (inside != 1) {
                ok = false;
                detail << "4-gon " << i << " holds " << inside << " points; ";
            }
        }
        cl.add("start/final 4-gons hold exactly one structure point", ok, detail.str());
    }
    {
        // Start edge f_i f'_i with final edges f_i f'_{i-1} and f_{i+1} f'_i.
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            const int j = (i + 1) % 4, h = (i + 3) % 4;
            const std::array<point, 4> q{pts[f[i]], pts[fp[i]], pts[f[j]], pts[fp[h]]};
            ok = ok && !simple_quadrilateral(q);
        }
        cl.add("4-gons with one start and two final edges are self-crossing", ok);
    }
    {
        bool ok = true;
        std::ostringstream detail;
        for (int i = 0; i < 4; ++i) {
            const int c = crossing_count(pts, own, f[i], f[(i + 1) % 4]);
            if (c != 7) {
                ok = false;
                detail << "f" << i << "f" << (i + 1) % 4 << " crosses " << c << "; ";
            }
        }
        cl.add("f_i f_{i+1} crosses seven edges", ok, detail.str());
    }
    {
        bool congruent = true;
        for (int b = 0; b < 4; ++b)
            for (int j = 0; j < 11; ++j) {
                const edge e = g.blockers[b][j];
                const point p = to_template(g, pts[e.u]), q = to_template(g, pts[e.v]);
                const segment& t = tpl::blocker_edges()[j];
                const point ta = tpl::rotate(t.a, b), tb = tpl::rotate(t.b, b);
                congruent = congruent && ((p == ta && q == tb) || (p == tb && q == ta));
            }
        cl.add("blockers are quarter-turn copies of blocker 0", congruent);
    }
    for (int b = 0; b < 4; ++b) {
        const auto& be = g.blockers[b];
        // Primed points are the template's second endpoints.
        auto primed = [&](int idx) {
            const point t = tpl::rotate(tpl::blocker_edges()[idx].b, b);
            const edge e = be[idx];
            return to_template(g, pts[e.u]) == t ? e.u : e.v;
        };
        auto unprimed = [&](int idx) { const edge e = be[idx]; return primed(idx) == e.u ? e.v : e.u; };
        std::vector<point> chain, a_pts, b_pts;
        for (int j = 0; j < 11; ++j) chain.push_back(pts[primed(j)]);
        for (int j = 1; j <= 5; ++j) {
            a_pts.push_back(pts[primed(a_edge(j))]);
            a_pts.push_back(pts[unprimed(a_edge(j))]);
            b_pts.push_back(pts[primed(b_edge(j))]);
            b_pts.push_back(pts[unprimed(b_edge(j))]);
        }
        const std::string tag = "blocker " + std::to_string(b) + ": ";
        cl.add(tag + "eleven edges", be.size() == 11);
        cl.add(tag + "primed points in convex position", strictly_convex_position(chain));
        cl.add(tag + "a-edge points in convex position", strictly_convex_position(a_pts));
        cl.add(tag + "b-edge points in convex position", strictly_convex_position(b_pts));
        const int partner = f[(3 + b) % 4];
        bool primed_ok = true, unprimed_ok = true;
        for (int j = 1; j <= 5; ++j) {
            const point ap = pts[primed(a_edge(j))], a = pts[unprimed(a_edge(j))];
            auto hits = [&](const point& from, int idx) {
                return segments_cross(from, pts[partner], pts[be[idx].u], pts[be[idx].v]);
            };
            primed_ok = primed_ok && hits(ap, c_edge);
            unprimed_ok = unprimed_ok && hits(a, c_edge);
            for (int l = 1; l <= 5; ++l) {
                primed_ok = primed_ok && hits(ap, b_edge(l));
                if (l < j) unprimed_ok = unprimed_ok && hits(a, b_edge(l));
            }
        }
        cl.add(tag + "a'_j to its outer point crosses every b-edge and c", primed_ok);
        cl.add(tag + "a_j to its outer point crosses b_l (l<j) and c", unprimed_ok,
               "reported only; the template realizes the primed variant", false);
        bool sees_ok = true;
        for (const edge& e : be)
            for (int p : {e.u, e.v}) {
                int seen = 0;
                for (int i = 0; i < 4; ++i) seen += point_sees_point(pts, own, p, fp[i]);
                sees_ok = sees_ok && seen <= 1;
            }
        cl.add(tag + "each point sees at most one inner point", sees_ok);
    }
    {
        const int s = int(g.sep_left.size());
        cl.add("separator sides have equal size", s == int(g.sep_right.size()) && s >= 1);
        const coord top_f = pts[f[0]].y, bottom_f = pts[f[2]].y;
        bool shape = true, seven = true;
        int worst = 1 << 30;
        for (const auto* side : {&g.sep_left, &g.sep_right}) {
            for (int j = 0; j < int(side->size()); ++j) {
                const edge e = (*side)[j];
                const point lo = std::min(pts[e.u], pts[e.v], [](point a, point b) { return a.y < b.y; });
                const point hi = pts[e.u].y < pts[e.v].y ? pts[e.v] : pts[e.u];
                shape = shape && lo.x == hi.x && hi.y > top_f && lo.y < bottom_f;
                if (j > 0) {
                    const edge in = (*side)[0];
                    const coord in_lo = std::min(pts[in.u].y, pts[in.v].y);
                    const coord in_hi = std::max(pts[in.u].y, pts[in.v].y);
                    shape = shape && in_lo == lo.y - 1 && in_hi == hi.y + 1;
                    const edge prev = (*side)[j - 1];
                    const coord step = side == &g.sep_left ? -1 : 1;
                    shape = shape && lo.x == pts[prev.u].x + step;
                }
                for (int p : {e.u, e.v})
                    for (int i = 0; i < 4; ++i) {
                        const int c = crossing_count(pts, blockers, p, fp[i]);
                        worst = std::min(worst, c);
                        seven = seven && c >= 7;
                    }
            }
        }
        cl.add("separators are vertical, span f0..f2, innermost one unit longer per end", shape);
        cl.add("separator endpoints to inner points cross at least seven blocker edges", seven,
               "minimum " + std::to_string(worst));
        std::vector<edge> targets = blockers;
        for (const edge& e : g.flip.start_edges()) targets.push_back(e);
        for (const edge& e : g.flip.final_edges()) targets.push_back(e);
        bool isolated = true;
        for (const auto* side : {&g.sep_left, &g.sep_right})
            for (int j = 0; j + 1 < int(side->size()); ++j)
                for (const edge& t : targets)
                    isolated = isolated && !edge_sees_edge(pts, own, (*side)[j], t);
        cl.add("separator edges other than the outermost see only separator edges", isolated);
    }
    return cl.out;
}

namespace {

struct band_layout {
    std::vector<segment> above_left, above_right, below_left, below_right;
};

/// Horizontal vertex-separator rows for a frame with the given incident
/// gadgets, nearest the frame first.
band_layout layout_bands(const vertex_gadget& g, const std::vector<incident_gadget>& incident,
                         const layout_params& lp) {
    const coord s = lp.separators;
    const coord mid_top = g.y_top + lp.gap / 2, mid_bottom = g.y_bottom - lp.gap / 2;
    const coord far_left = g.x_left - s - 1 - lp.band_reach, far_right = g.x_right + s + 1 + lp.band_reach;
    auto bands = [&](bool above, std::vector<segment>& left, std::vector<segment>& right) {
        std::vector<coord> xs;
        for (const incident_gadget& ig : incident)
            if (ig.above == above) xs.push_back(ig.center_x);
        const coord dir = above ? 1 : -1;
        const coord base = above ? mid_top : mid_bottom;
        auto row = [&](coord i, coord x0, coord x1) {
            return segment{{x0, base + dir * i}, {x1, base + dir * i}};
        };
        if (xs.empty()) {
            // Nothing attached on this side: both groups run the full width, stacked.
            for (coord i = 0; i < s; ++i) left.push_back(row(i, far_left, far_right));
            for (coord i = 0; i < s; ++i) right.push_back(row(s + i, far_left, far_right));
            return;
        }
        const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        const coord near_left = *lo - lp.gadget_half_width - lp.band_clearance;
        const coord near_right = *hi + lp.gadget_half_width + lp.band_clearance;
        if (near_left <= far_left || near_right >= far_right)
            throw gadget_error("vertex slot too narrow for its bands");
        for (coord i = 0; i < s; ++i) left.push_back(row(i, far_left, near_left));
        for (coord i = 0; i < s; ++i) right.push_back(row(i, near_right, far_right));
    };
    band_layout out;
    bands(true, out.above_left, out.above_right);
    bands(false, out.below_left, out.below_right);
    return out;
}

}  // namespace

std::vector<edge> vertex_gadget::separator_edges() const {
    std::vector<edge> out;
    for (const auto* v : {&left_vertical, &left_above, &left_below, &right_vertical, &right_above, &right_below})
        out.insert(out.end(), v->begin(), v->end());
    return out;
}

std::vector<edge> vertex_gadget::all_edges() const {
    std::vector<edge> out{bottom, top};
    out.insert(out.end(), middle.begin(), middle.end());
    for (const connector& c : connectors) out.push_back(c.e);
    for (const edge& e : separator_edges()) out.push_back(e);
    return out;
}

vertex_gadget build_vertex_gadget(const vertex_slot& slot, std::vector<incident_gadget> incident,
                                  const layout_params& lp, point_set& pts) {
    const coord s = lp.separators;
    if (slot.x_right <= slot.x_left) throw gadget_error("empty vertex slot");
    vertex_gadget g;
    g.x_left = slot.x_left;
    g.x_right = slot.x_right;
    g.y_bottom = slot.y_bottom;
    g.y_top = slot.y_bottom + lp.frame_height;
    auto add_edge = [&](point a, point b) {
        pts.push_back(a);
        pts.push_back(b);
        return make_edge(int(pts.size()) - 2, int(pts.size()) - 1);
    };
    const coord xl = g.x_left, xr = g.x_right, yb = g.y_bottom, yt = g.y_top;
    g.bottom = add_edge({xl, yb}, {xr, yb});
    g.top = add_edge({xl, yt}, {xr, yt});
    for (coord i = 0; i < s; ++i) g.middle.push_back(add_edge({xl + 1, yb + 2 + i}, {xr - 1, yb + 2 + i}));

    std::stable_sort(incident.begin(), incident.end(), [](const incident_gadget& a, const incident_gadget& b) {
        if (a.above != b.above) return !a.above;
        return a.center_x < b.center_x;
    });
    const coord reach = tpl::outer_extent * lp.x_scale;
    for (const incident_gadget& ig : incident) {
        connector c;
        c.owner = ig.owner;
        c.above = ig.above;
        const coord y = ig.above ? yt - 1 : yb + 1;
        const coord px = ig.above ? ig.center_x + reach : ig.center_x - reach;
        c.e = add_edge({ig.center_x, y}, {px, y});
        c.channel_point = c.e.u;
        c.partner_point = c.e.v;
        g.connectors.push_back(c);
    }

    const coord mid_top = yt + lp.gap / 2, mid_bottom = yb - lp.gap / 2;
    const band_layout bands = layout_bands(g, incident, lp);
    auto emit = [&](const std::vector<segment>& segs, std::vector<edge>& out) {
        for (const segment& sg : segs) out.push_back(add_edge(sg.a, sg.b));
    };
    for (coord j = 0; j < s; ++j)
        g.left_vertical.push_back(add_edge({xl - 1 - j, mid_bottom + 1}, {xl - 1 - j, mid_top - 1}));
    emit(bands.above_left, g.left_above);
    emit(bands.below_left, g.left_below);
    for (coord j = 0; j < s; ++j)
        g.right_vertical.push_back(add_edge({xr + 1 + j, mid_bottom + 1}, {xr + 1 + j, mid_top - 1}));
    emit(bands.above_right, g.right_above);
    emit(bands.below_right, g.right_below);

    for (const gadget_check& c : check_vertex_gadget(pts, g, lp))
        if (c.enforced && !c.passed) throw gadget_error("vertex gadget invariant violated: " + c.name);
    return g;
}

std::vector<gadget_check> check_vertex_gadget(const point_set& pts, const vertex_gadget& g,
                                              const layout_params& lp) {
    check_list cl;
    const coord s = lp.separators;
    auto horizontal = [&](const edge& e, coord x0, coord x1, coord y) {
        const point a = pts[e.u], b = pts[e.v];
        return std::min(a, b) == point{x0, y} && std::max(a, b) == point{x1, y};
    };
    auto vertical = [&](const edge& e, coord x, coord y0, coord y1) {
        const point a = pts[e.u], b = pts[e.v];
        return std::min(a, b) == point{x, y0} && std::max(a, b) == point{x, y1};
    };
    const coord xl = g.x_left, xr = g.x_right, yb = g.y_bottom, yt = g.y_top;
    cl.add("top- and bottom-edge are equally long and horizontal",
           horizontal(g.bottom, xl, xr, yb) && horizontal(g.top, xl, xr, yt) && yt == yb + lp.frame_height);
    bool middle_ok = coord(g.middle.size()) == s;
    for (coord i = 0; middle_ok && i < s; ++i) middle_ok = horizontal(g.middle[i], xl + 1, xr - 1, yb + 2 + i);
    cl.add("middle edges are one unit shorter per side", middle_ok);
    const std::vector<edge> own = g.all_edges();
    cl.add("top- and bottom-edge see each other", edge_sees_edge(pts, own, g.top, g.bottom));

    const coord reach = gadget_template::outer_extent * lp.x_scale;
    bool conn_ok = true, extent_ok = true;
    for (const connector& c : g.connectors) {
        const point p = pts[c.channel_point], q = pts[c.partner_point];
        const coord strip = c.above ? yt - 1 : yb + 1;
        conn_ok = conn_ok && p.y == strip && q.y == strip && q.x == p.x + (c.above ? reach : -reach);
        extent_ok = extent_ok && xl < p.x - lp.gadget_half_width && xr > p.x + lp.gadget_half_width;
    }
    cl.add("frame extends past the outermost incident gadgets", extent_ok);
    cl.add("connectors lie in their strips under f1 / over f3", conn_ok);

    const coord mid_top = yt + lp.gap / 2, mid_bottom = yb - lp.gap / 2;
    bool vert_ok = coord(g.left_vertical.size()) == s && coord(g.right_vertical.size()) == s;
    for (coord j = 0; vert_ok && j < s; ++j) {
        vert_ok = vertical(g.left_vertical[j], xl - 1 - j, mid_bottom + 1, mid_top - 1) &&
                  vertical(g.right_vertical[j], xr + 1 + j, mid_bottom + 1, mid_top - 1);
    }
    cl.add("vertical separator edges stop one unit short of the gap midlines", vert_ok);
    bool band_ok = true;
    std::vector<incident_gadget> incident;
    for (const connector& c : g.connectors) incident.push_back({c.owner, pts[c.channel_point].x, c.above});
    try {
        const band_layout want = layout_bands(g, incident, lp);
        const std::pair<const std::vector<edge>*, const std::vector<segment>*> groups[] = {
            {&g.left_above, &want.above_left},
            {&g.left_below, &want.below_left},
            {&g.right_above, &want.above_right},
            {&g.right_below, &want.below_right}};
        for (const auto& [have, expect] : groups) {
            band_ok = band_ok && have->size() == expect->size();
            for (std::size_t i = 0; band_ok && i < have->size(); ++i)
                band_ok = horizontal((*have)[i], (*expect)[i].a.x, (*expect)[i].b.x, (*expect)[i].a.y);
        }
    } catch (const gadget_error&) {
        band_ok = false;
    }
    cl.add("each vertex separator has its horizontal groups at their rows and extents", band_ok);
    return cl.out;
}

flip_move activation_move(const vertex_gadget& g) {
    flip_move f;
    f.removed[0] = g.bottom;
    f.removed[1] = g.top;
    f.added[0] = make_edge(g.bottom.u, g.top.u);
    f.added[1] = make_edge(g.bottom.v, g.top.v);
    return f;
}

}  // namespace matchflip
