#include "matchflip/reduction.h"

#include <algorithm>
#include <map>
#include <set>

namespace matchflip {

namespace {

const std::vector<std::pair<point_role, std::string>>& role_names() {
    static const std::vector<std::pair<point_role, std::string>> names{
        {point_role::flip_structure, "flip-structure"}, {point_role::blocker, "blocker"},
        {point_role::separator, "separator"},           {point_role::frame, "frame"},
        {point_role::connector, "connector"},           {point_role::vertex_separator, "vertex-separator"},
    };
    return names;
}

void annotate(reduction_instance& inst, std::size_t from, point_role role, owner_ref owner, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) inst.annotations[from + i] = annotation{role, owner};
}

}  // namespace

std::string role_name(point_role r) {
    for (const auto& [role, name] : role_names())
        if (role == r) return name;
    return "unknown";
}

std::optional<point_role> parse_role(const std::string& name) {
    for (const auto& [role, n] : role_names())
        if (n == name) return role;
    return std::nullopt;
}

std::string owner_name(const owner_ref& o) { return (o.is_vertex ? "v" : "e") + std::to_string(o.id); }

std::optional<owner_ref> parse_owner(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'v' && name[0] != 'e')) return std::nullopt;
    int id = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9' || id > 100'000'000) return std::nullopt;
        id = id * 10 + (name[i] - '0');
    }
    return owner_ref{name[0] == 'v', id};
}

const edge_gadget_record* instance_layout::find_edge(int id) const {
    for (const auto& r : edges)
        if (r.edge_id == id) return &r;
    return nullptr;
}

const vertex_gadget_record* instance_layout::find_vertex(int id) const {
    for (const auto& r : vertices)
        if (r.vertex == id) return &r;
    return nullptr;
}

reduction_instance reduce(const planar_graph_input& g, int c) {
    check_graph_input(g);
    if (c < 0 || c > g.n) throw std::invalid_argument("cover budget must satisfy 0 <= c <= |V|");
    reduction_instance inst;
    inst.k = 2 * c + 5 * int(g.edges.size());
    const layout_params lp = make_layout_params(inst.k);
    const visibility_rep rep = build_visibility_rep(g);

    coord max_x = 0, max_y = 0;
    for (const auto& v : rep.vertices) max_x = std::max(max_x, v.x_right), max_y = std::max(max_y, v.y);
    std::vector<std::pair<coord, coord>> rows, cols;
    for (coord r = 1; r <= max_y; ++r) rows.emplace_back(r, lp.row_pitch - 1);
    for (coord x = 1; x <= max_x; ++x) cols.emplace_back(x, lp.column_pitch - 1);
    const visibility_rep grid = stretch(rep, rows, cols);

    auto owned_block = [&](std::size_t from, owner_ref owner, std::initializer_list<std::pair<point_role, std::size_t>> parts) {
        inst.annotations.resize(inst.points.size());
        for (const auto& [role, count] : parts) {
            annotate(inst, from, role, owner, count);
            from += count;
        }
    };

    std::vector<edge> m1;
    std::vector<edge_gadget> edge_gadgets;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const edge_segment& es = grid.edges[i];
        const coord lower = grid.vertices[es.bottom_vertex].y + lp.frame_height + lp.gap;
        const coord upper = grid.vertices[es.top_vertex].y - lp.gap;
        const std::size_t from = inst.points.size();
        edge_gadget eg = build_edge_gadget(fit_edge_slot(es.x, lower, upper, lp), inst.k, gadget_scale::full, inst.points);
        owned_block(from, {false, int(i)},
                    {{point_role::flip_structure, 8}, {point_role::blocker, 88},
                     {point_role::separator, inst.points.size() - from - 96}});
        for (const edge& e : eg.start_matching_edges()) m1.push_back(e);
        edge_gadgets.push_back(std::move(eg));
    }
    for (int v = 0; v < g.n; ++v) {
        std::vector<incident_gadget> incident;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const edge_segment& es = grid.edges[i];
            if (es.bottom_vertex == v) incident.push_back({int(i), es.x, true});
            if (es.top_vertex == v) incident.push_back({int(i), es.x, false});
        }
        if (incident.empty()) {
            inst.dropped_vertices.push_back(v);
            continue;
        }
        coord lo = incident.front().center_x, hi = lo;
        for (const auto& ig : incident) lo = std::min(lo, ig.center_x), hi = std::max(hi, ig.center_x);
        vertex_slot slot;
        slot.x_left = lo - lp.gadget_half_width - lp.frame_margin;
        slot.x_right = hi + lp.gadget_half_width + lp.frame_margin;
        slot.y_bottom = grid.vertices[v].y;
        const std::size_t from = inst.points.size();
        vertex_gadget vg = build_vertex_gadget(slot, incident, lp, inst.points);
        owned_block(from, {true, v},
                    {{point_role::frame, 4 + 2 * vg.middle.size()},
                     {point_role::connector, 2 * vg.connectors.size()},
                     {point_role::vertex_separator, 2 * vg.separator_edges().size()}});
        for (const edge& e : vg.all_edges()) m1.push_back(e);
    }
    inst.m1 = make_matching(m1);
    std::vector<edge> m2;
    std::set<edge> start;
    for (const auto& eg : edge_gadgets)
        for (const edge& e : eg.flip.start_edges()) start.insert(e);
    for (const edge& e : m1)
        if (!start.count(e)) m2.push_back(e);
    for (const auto& eg : edge_gadgets)
        for (const edge& e : eg.flip.final_edges()) m2.push_back(e);
    inst.m2 = make_matching(m2);
    for (const plane_matching* m : {&inst.m1, &inst.m2}) {
        const auto problems = validate(inst.points, *m);
        if (!problems.empty()) throw gadget_error("reduction produced an invalid matching: " + describe(problems.front()));
    }
    return inst;
}

instance_layout recover_layout(const reduction_instance& inst) {
    if (inst.annotations.size() != inst.points.size())
        throw std::invalid_argument("annotations do not cover every point");
    instance_layout layout;
    layout.params = make_layout_params(inst.k);
    const int s = layout.params.separators;
    std::map<owner_ref, std::vector<int>> by_owner;
    for (std::size_t i = 0; i < inst.points.size(); ++i) by_owner[inst.annotations[i].owner].push_back(int(i));
    auto take_roles = [&](const std::vector<int>& idx, point_role role) {
        std::vector<int> out;
        for (int i : idx)
            if (inst.annotations[i].role == role) out.push_back(i);
        return out;
    };
    auto pairs = [](const std::vector<int>& idx, std::size_t from, std::size_t count) {
        std::vector<edge> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(make_edge(idx[from + 2 * i], idx[from + 2 * i + 1]));
        return out;
    };
    for (const auto& [owner, idx] : by_owner) {
        if (owner.is_vertex) continue;
        const auto flip = take_roles(idx, point_role::flip_structure);
        const auto blk = take_roles(idx, point_role::blocker);
        const auto sep = take_roles(idx, point_role::separator);
        if (flip.size() != 8 || blk.size() != 88 || sep.size() != std::size_t(4 * s) || idx.size() != 96 + sep.size())
            throw std::invalid_argument("edge gadget " + owner_name(owner) + " has the wrong point counts");
        edge_gadget_record rec;
        rec.edge_id = owner.id;
        edge_gadget& eg = rec.gadget;
        for (int i = 0; i < 4; ++i) eg.flip.outer[i] = flip[i], eg.flip.inner[i] = flip[4 + i];
        for (int b = 0; b < 4; ++b) {
            const auto es = pairs(blk, 22 * b, 11);
            std::copy(es.begin(), es.end(), eg.blockers[b].begin());
        }
        eg.sep_left = pairs(sep, 0, s);
        eg.sep_right = pairs(sep, 2 * s, s);
        const point f0 = inst.points[eg.flip.outer[0]], f2 = inst.points[eg.flip.outer[2]];
        eg.center = point{(f0.x + f2.x) / 2, (f0.y + f2.y) / 2};
        eg.x_scale = std::max<coord>(1, (f0.x - eg.center.x) / 320);
        eg.y_scale = std::max<coord>(1, (f0.y - eg.center.y) / 640);
        layout.edges.push_back(std::move(rec));
    }
    for (const auto& [owner, idx] : by_owner) {
        if (!owner.is_vertex) continue;
        const auto frame = take_roles(idx, point_role::frame);
        const auto conn = take_roles(idx, point_role::connector);
        const auto isep = take_roles(idx, point_role::vertex_separator);
        if (frame.size() != std::size_t(4 + 2 * s) || conn.size() % 2 != 0 || isep.size() != std::size_t(12 * s) ||
            idx.size() != frame.size() + conn.size() + isep.size())
            throw std::invalid_argument("vertex gadget " + owner_name(owner) + " has the wrong point counts");
        vertex_gadget_record rec;
        rec.vertex = owner.id;
        vertex_gadget& vg = rec.gadget;
        vg.bottom = make_edge(frame[0], frame[1]);
        vg.top = make_edge(frame[2], frame[3]);
        vg.middle = pairs(frame, 4, s);
        vg.x_left = inst.points[frame[0]].x;
        vg.x_right = inst.points[frame[1]].x;
        vg.y_bottom = inst.points[frame[0]].y;
        vg.y_top = inst.points[frame[2]].y;
        for (std::size_t i = 0; i + 1 < conn.size(); i += 2) {
            connector c;
            c.channel_point = conn[i];
            c.partner_point = conn[i + 1];
            c.e = make_edge(conn[i], conn[i + 1]);
            const point p = inst.points[conn[i]];
            c.above = p.y == vg.y_top - 1;
            for (auto& er : layout.edges)
                if (er.gadget.center.x == p.x) {
                    c.owner = er.edge_id;
                    (c.above ? er.lower_vertex : er.upper_vertex) = owner.id;
                }
            if (c.owner < 0) throw std::invalid_argument("connector of " + owner_name(owner) + " matches no edge gadget");
            vg.connectors.push_back(c);
        }
        std::vector<edge>* groups[] = {&vg.left_vertical, &vg.left_above, &vg.left_below,
                                       &vg.right_vertical, &vg.right_above, &vg.right_below};
        for (int gi = 0; gi < 6; ++gi) *groups[gi] = pairs(isep, 2 * s * gi, s);
        layout.vertices.push_back(std::move(rec));
    }
    return layout;
}

bool frame_deactivated(const plane_matching& m, const vertex_gadget& g) {
    return contains_edge(m, g.top) && contains_edge(m, g.bottom);
}

flip_move activate(const instance_layout& layout, int vertex, const plane_matching& current) {
    const auto* rec = layout.find_vertex(vertex);
    if (!rec) throw precondition_error("vertex " + std::to_string(vertex) + " has no gadget");
    if (!frame_deactivated(current, rec->gadget)) throw precondition_error("vertex gadget is not deactivated");
    return activation_move(rec->gadget);
}

flip_move deactivate(const instance_layout& layout, int vertex, const plane_matching& current) {
    const auto* rec = layout.find_vertex(vertex);
    if (!rec) throw precondition_error("vertex " + std::to_string(vertex) + " has no gadget");
    const flip_move act = activation_move(rec->gadget);
    if (!contains_edge(current, act.added[0]) || !contains_edge(current, act.added[1]))
        throw precondition_error("vertex gadget is not activated");
    return reversed(act);
}

std::vector<flip_move> five_flip_sequence(const reduction_instance& inst, const instance_layout& layout,
                                          int edge_id, gadget_side side, const plane_matching& current) {
    const auto* er = layout.find_edge(edge_id);
    if (!er) throw precondition_error("edge " + std::to_string(edge_id) + " has no gadget");
    const int vertex = side == gadget_side::below ? er->lower_vertex : er->upper_vertex;
    const auto* vr = layout.find_vertex(vertex);
    if (!vr) throw precondition_error("edge gadget has no vertex gadget on that side");
    const connector* conn = nullptr;
    for (const connector& c : vr->gadget.connectors)
        if (c.owner == edge_id) conn = &c;
    if (!conn) throw precondition_error("vertex gadget has no connector for the edge gadget");
    if (frame_deactivated(current, vr->gadget)) throw precondition_error("vertex gadget is not activated");
    const flip_structure& fs = er->gadget.flip;
    if (classify_configuration(current, fs) != configuration::start)
        throw precondition_error("edge gadget is not in start configuration");

    // Gadgets above the frame pivot on f1, gadgets below on f3.
    const int q = conn->above ? 1 : 3;
    const int p = conn->channel_point, pp = conn->partner_point;
    auto f = [&](int i) { return fs.outer[((i % 4) + 4) % 4]; };
    auto fi = [&](int i) { return fs.inner[((i % 4) + 4) % 4]; };
    std::vector<flip_move> moves;
    moves.push_back({{make_edge(p, pp), make_edge(f(q), fi(q))}, {make_edge(pp, f(q)), make_edge(p, fi(q))}});
    for (int t = 1; t <= 3; ++t)
        moves.push_back({{make_edge(p, fi(q + t - 1)), make_edge(f(q + t), fi(q + t))},
                         {make_edge(f(q + t), fi(q + t - 1)), make_edge(p, fi(q + t))}});
    moves.push_back({{make_edge(p, fi(q + 3)), make_edge(pp, f(q))}, {make_edge(f(q), fi(q + 3)), make_edge(p, pp)}});
    plane_matching m = current;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (!flip_is_legal(inst.points, m, moves[i]))
            throw precondition_error("connector move " + std::to_string(i + 1) + " is not a legal flip");
        m = apply_flip_unchecked(m, moves[i]);
    }
    return moves;
}

flip_sequence witness_sequence(const reduction_instance& inst, const std::vector<int>& cover) {
    const instance_layout layout = recover_layout(inst);
    std::vector<int> order = cover;
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        throw precondition_error("cover lists a vertex twice");
    const std::set<int> in_cover(order.begin(), order.end());
    for (const auto& er : layout.edges)
        if (!in_cover.count(er.lower_vertex) && !in_cover.count(er.upper_vertex))
            throw precondition_error("cover misses edge " + std::to_string(er.edge_id));
    flip_sequence seq;
    seq.start = inst.m1;
    plane_matching cur = inst.m1;
    auto push = [&](const flip_move& f) {
        cur = apply_flip(inst.points, cur, f);
        seq.moves.push_back(f);
    };
    for (int v : order) push(activate(layout, v, cur));
    for (const auto& er : layout.edges) {
        const gadget_side side = in_cover.count(er.lower_vertex) ? gadget_side::below : gadget_side::above;
        for (const flip_move& f : five_flip_sequence(inst, layout, er.edge_id, side, cur)) push(f);
    }
    for (int v : order) push(deactivate(layout, v, cur));
    return seq;
}

bool is_vertex_cover(const planar_graph_input& g, const std::vector<int>& cover) {
    std::vector<char> in(std::size_t(std::max(g.n, 0)), 0);
    for (int v : cover) {
        if (v < 0 || v >= g.n) return false;
        in[v] = 1;
    }
    return std::all_of(g.edges.begin(), g.edges.end(), [&](const edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

struct cover_search {
    int n;
    std::vector<std::uint32_t> adj;
    std::uint32_t best_set = 0;
    int best = 0;

    static int popcount(std::uint32_t x) { return __builtin_popcount(x); }

    // alive: vertices whose incident uncovered edges still matter.
    void run(std::uint32_t alive, std::uint32_t chosen, int size) {
        if (size >= best) return;
        int pick = -1, deg = 0, edges = 0;
        for (int v = 0; v < n; ++v) {
            if (!(alive >> v & 1)) continue;
            const int d = popcount(adj[v] & alive);
            edges += d;
            if (d > deg) deg = d, pick = v;
        }
        edges /= 2;
        if (pick < 0) {
            best = size;
            best_set = chosen;
            return;
        }
        if (size + (edges + deg - 1) / deg >= best) return;
        run(alive & ~(1u << pick), chosen | (1u << pick), size + 1);
        const std::uint32_t nb = adj[pick] & alive;
        if (popcount(nb) > 1 || deg == 1) run(alive & ~nb & ~(1u << pick), chosen | nb, size + popcount(nb));
    }
};

}  // namespace

std::optional<std::vector<int>> solve_vertex_cover(const planar_graph_input& g, int c) {
    check_graph_input(g);
    if (g.n > 24) throw resource_exhausted("vertex cover search is limited to 24 vertices");
    cover_search cs{g.n, std::vector<std::uint32_t>(std::size_t(g.n), 0)};
    for (const edge& e : g.edges) cs.adj[e.u] |= 1u << e.v, cs.adj[e.v] |= 1u << e.u;
    cs.best = g.n + 1;
    cs.run(g.n == 32 ? ~0u : (1u << g.n) - 1, 0, 0);
    if (cs.best > c) return std::nullopt;
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (cs.best_set >> v & 1) out.push_back(v);
    return out;
}

instance_bounds bounds_for(int vertices, int edges, int k) {
    // Per edge gadget 96 + 4s points plus two connectors; per vertex gadget
    // 4 + 14s points. Pitches follow make_layout_params; see README.
    const std::int64_t n = vertices, m = edges, s = 2 * std::int64_t(k) + 2;
    instance_bounds b;
    b.max_points = (n + m) * (100 + 14 * s);
    const std::int64_t column_pitch = 64 * (s + 14) * (s + 14);
    const std::int64_t row_pitch = 39100 + 5 * s;
    const std::int64_t width = (3 * n + 2) * column_pitch;
    const std::int64_t height = (n + 1) * row_pitch;
    b.max_area = (long double)width * (long double)height;
    b.max_abs_coordinate = width + height;
    return b;
}

bounding_box bbox(const point_set& pts) {
    bounding_box b;
    if (pts.empty()) return b;
    b.min_x = b.max_x = pts[0].x;
    b.min_y = b.max_y = pts[0].y;
    for (const point& p : pts) {
        b.min_x = std::min(b.min_x, p.x);
        b.max_x = std::max(b.max_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

}  // namespace matchflip
