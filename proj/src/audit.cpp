#include <algorithm>
#include <climits>
#include <set>

#include "matchflip/reduction.h"
#include "matchflip/segment_index.h"

namespace matchflip {

bool audit_report::passed() const {
    return std::all_of(records.begin(), records.end(), [](const audit_record& r) { return r.passed; });
}

namespace {

struct recorder {
    audit_report report;
    void add(std::string check, std::string gadget, std::string expected, std::string observed, bool ok) {
        report.records.push_back({std::move(check), std::move(gadget), std::move(expected), std::move(observed), ok});
    }
};

std::string edge_text(const edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::vector<int> points_of(const std::vector<edge>& es) {
    std::vector<int> out;
    for (const edge& e : es) out.push_back(e.u), out.push_back(e.v);
    return out;
}

std::vector<int> core_points(const edge_gadget& g) {
    std::vector<int> out(g.flip.outer.begin(), g.flip.outer.end());
    out.insert(out.end(), g.flip.inner.begin(), g.flip.inner.end());
    for (const auto& b : g.blockers)
        for (const edge& e : b) out.push_back(e.u), out.push_back(e.v);
    return out;
}

bool edge_sees_edge_cached(const std::set<std::pair<int, int>>& visible, const edge& e, const edge& t) {
    auto sees = [&](int a, int b) { return visible.count({std::min(a, b), std::max(a, b)}) > 0; };
    return (sees(e.u, t.u) && sees(e.v, t.v)) || (sees(e.u, t.v) && sees(e.v, t.u));
}

void check_valid(const reduction_instance& inst, recorder& rec) {
    for (const auto& [name, m] : {std::pair{"m1", &inst.m1}, std::pair{"m2", &inst.m2}}) {
        const auto problems = validate(inst.points, *m);
        rec.add("valid", name, "plane perfect matching",
                problems.empty() ? "ok" : std::to_string(problems.size()) + " violations, first: " + describe(problems.front()),
                problems.empty());
    }
    rec.add("valid", "annotations", std::to_string(inst.points.size()) + " entries",
            std::to_string(inst.annotations.size()) + " entries", inst.annotations.size() == inst.points.size());
}

void check_matching_difference(const reduction_instance& inst, const instance_layout& layout, recorder& rec) {
    std::set<edge> expect_removed, expect_added;
    for (const auto& er : layout.edges) {
        for (const edge& e : er.gadget.flip.start_edges()) expect_removed.insert(e);
        for (const edge& e : er.gadget.flip.final_edges()) expect_added.insert(e);
    }
    std::set<edge> a(inst.m1.edges.begin(), inst.m1.edges.end()), b(inst.m2.edges.begin(), inst.m2.edges.end());
    std::set<edge> removed, added;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(removed, removed.end()));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(added, added.end()));
    const bool ok = removed == expect_removed && added == expect_added;
    rec.add("valid", "m1/m2", "differ exactly in start/final flip-structure edges",
            std::to_string(removed.size()) + " removed, " + std::to_string(added.size()) + " added", ok);
}

void check_shapes(const reduction_instance& inst, const instance_layout& layout, recorder& rec) {
    auto report = [&](const std::string& gadget, const std::vector<gadget_check>& checks) {
        int failed = 0;
        std::string first;
        for (const gadget_check& c : checks)
            if (c.enforced && !c.passed && failed++ == 0) first = c.name;
        rec.add("shape", gadget, "all construction invariants",
                failed == 0 ? "ok" : std::to_string(failed) + " failed, first: " + first, failed == 0);
    };
    for (const auto& er : layout.edges) report(owner_name({false, er.edge_id}), check_edge_gadget(inst.points, er.gadget));
    for (const auto& vr : layout.vertices)
        report(owner_name({true, vr.vertex}), check_vertex_gadget(inst.points, vr.gadget, layout.params));
}

void check_a(const segment_index& m1, const instance_layout& layout, recorder& rec) {
    for (const auto& er : layout.edges) {
        const auto& f = er.gadget.flip.outer;
        std::string observed;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            const int c = m1.crossings(f[i], f[(i + 1) % 4], INT_MAX);
            ok = ok && c == 7;
            observed += (i ? "," : "") + std::to_string(c);
        }
        rec.add("a: f_i f_{i+1} crossings", owner_name({false, er.edge_id}), "7,7,7,7", observed, ok);
    }
}

void check_b(const reduction_instance& inst, const instance_layout& layout, recorder& rec) {
    for (const auto& er : layout.edges) {
        const edge_gadget& g = er.gadget;
        std::vector<edge> blockers;
        for (const auto& b : g.blockers) blockers.insert(blockers.end(), b.begin(), b.end());
        const segment_index idx(inst.points, blockers);
        int worst = INT_MAX;
        for (const auto* side : {&g.sep_left, &g.sep_right})
            for (int p : points_of(*side))
                for (int q : g.flip.inner) worst = std::min(worst, idx.crossings(p, q, INT_MAX));
        rec.add("b: separator to inner point blocker crossings", owner_name({false, er.edge_id}), ">= 7",
                "min " + std::to_string(worst), worst >= 7);
    }
}

void check_c(const reduction_instance& inst, const instance_layout& layout, const segment_index& m1,
             const std::vector<int>& partner, recorder& rec) {
    const int n = int(inst.points.size());
    for (const auto& er : layout.edges) {
        const edge_gadget& g = er.gadget;
        std::set<edge> own_separators;
        for (const edge& e : g.sep_left) own_separators.insert(e);
        for (const edge& e : g.sep_right) own_separators.insert(e);
        int violations = 0;
        std::string first;
        for (const auto* side : {&g.sep_left, &g.sep_right})
            for (std::size_t j = 0; j + 1 < side->size(); ++j) {
                const edge e = (*side)[j];
                for (int q = 0; q < n; ++q) {
                    if (partner[q] < 0 || q == e.u || q == e.v || !m1.sees(e.u, q)) continue;
                    const edge t = make_edge(q, partner[q]);
                    if (own_separators.count(t)) continue;
                    const bool sees = (m1.sees(e.v, partner[q])) || (m1.sees(e.u, partner[q]) && m1.sees(e.v, q));
                    if (sees && violations++ == 0) first = edge_text(e) + " sees " + edge_text(t);
                }
            }
        rec.add("c: separator isolation", owner_name({false, er.edge_id}),
                "inner separator edges see only separator edges", violations == 0 ? "ok" : first, violations == 0);
    }
}

void check_d(const instance_layout& layout, const segment_index& m1, recorder& rec) {
    for (const auto& vr : layout.vertices) {
        const std::vector<edge> vedges = vr.gadget.all_edges();
        const std::vector<int> vpts = points_of(vedges);
        int violations = 0;
        std::string first;
        for (const auto& er : layout.edges) {
            const edge_gadget& g = er.gadget;
            std::set<std::pair<int, int>> visible;
            for (int p : vpts)
                for (int q : core_points(g))
                    if (m1.sees(p, q)) visible.insert({std::min(p, q), std::max(p, q)});
            if (visible.empty()) continue;
            std::vector<edge> targets;
            for (const auto& b : g.blockers) targets.insert(targets.end(), b.begin(), b.end());
            for (const edge& e : g.flip.start_edges()) targets.push_back(e);
            for (const edge& e : g.flip.final_edges()) targets.push_back(e);
            for (const edge& e : vedges)
                for (const edge& t : targets)
                    if (edge_sees_edge_cached(visible, e, t) && violations++ == 0)
                        first = edge_text(e) + " sees " + edge_text(t) + " of " + owner_name({false, er.edge_id});
        }
        rec.add("d: vertex gadget shielded from blockers and flip structures", owner_name({true, vr.vertex}),
                "no edge sees B, F_s or F_f", violations == 0 ? "ok" : first, violations == 0);
    }
}

void check_e(const reduction_instance& inst, const instance_layout& layout, const segment_index& m1, recorder& rec) {
    const int s = layout.params.separators;
    const int n = int(inst.points.size());
    for (const auto& er : layout.edges) {
        std::vector<char> excluded(std::size_t(n), 0);
        for (int i = 0; i < n; ++i) {
            const owner_ref o = inst.annotations[i].owner;
            excluded[i] = (!o.is_vertex && o.id == er.edge_id) ||
                          (o.is_vertex && (o.id == er.lower_vertex || o.id == er.upper_vertex));
        }
        int worst = INT_MAX, targets = 0;
        std::string first;
        for (int p : core_points(er.gadget))
            for (int q = 0; q < n; ++q) {
                if (excluded[q]) continue;
                ++targets;
                const int c = m1.crossings(p, q, s);
                if (c < worst) {
                    worst = c;
                    first = std::to_string(p) + "->" + std::to_string(q);
                }
            }
        const bool ok = worst >= s;
        rec.add("e: 2k+2 barrier", owner_name({false, er.edge_id}), ">= " + std::to_string(s) + " crossings",
                targets == 0 ? "no outside points" : "min " + std::to_string(std::min(worst, s)) + (ok ? "" : " at " + first),
                ok);
    }
}

void check_f(const reduction_instance& inst, const instance_layout& layout, recorder& rec) {
    const int s = layout.params.separators;
    std::vector<edge> separators;
    for (const auto& vr : layout.vertices) {
        const auto es = vr.gadget.separator_edges();
        separators.insert(separators.end(), es.begin(), es.end());
    }
    const segment_index idx(inst.points, separators);
    for (std::size_t a = 0; a < layout.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < layout.vertices.size(); ++b) {
            const vertex_gadget& g1 = layout.vertices[a].gadget;
            const vertex_gadget& g2 = layout.vertices[b].gadget;
            int worst = INT_MAX;
            for (const edge& e1 : {g1.top, g1.bottom})
                for (const edge& e2 : {g2.top, g2.bottom}) {
                    const int straight = std::max(idx.crossings(e1.u, e2.u, INT_MAX), idx.crossings(e1.v, e2.v, INT_MAX));
                    const int twisted = std::max(idx.crossings(e1.u, e2.v, INT_MAX), idx.crossings(e1.v, e2.u, INT_MAX));
                    worst = std::min({worst, straight, twisted});
                }
            rec.add("f: frame-to-frame barrier",
                    owner_name({true, layout.vertices[a].vertex}) + "/" + owner_name({true, layout.vertices[b].vertex}),
                    ">= " + std::to_string(s) + " vertex-separator crossings", "min " + std::to_string(worst), worst >= s);
        }
}

void check_g(const reduction_instance& inst, const instance_layout& layout, recorder& rec) {
    const point_set& pts = inst.points;
    for (const auto& vr : layout.vertices) {
        plane_matching active;
        try {
            active = apply_flip(pts, inst.m1, activate(layout, vr.vertex, inst.m1));
        } catch (const std::exception& ex) {
            rec.add("g: activation", owner_name({true, vr.vertex}), "legal flip", ex.what(), false);
            continue;
        }
        for (const connector& c : vr.gadget.connectors) {
            const std::string name = owner_name({true, vr.vertex}) + "/" + owner_name({false, c.owner});
            const edge_gadget_record* er = layout.find_edge(c.owner);
            if (!er) {
                rec.add("g: connector", name, "edge gadget exists", "missing", false);
                continue;
            }
            const flip_structure& fs = er->gadget.flip;
            const int q = c.above ? 1 : 3;
            auto fi = [&](int i) { return fs.inner[i % 4]; };
            const bool sight = edge_sees_edge(pts, active.edges, c.e, make_edge(fs.outer[q], fi(q)));
            rec.add("g: connector sees f_q f'_q", name, "true", sight ? "true" : "false", sight);

            std::vector<edge> final_state;
            const auto start = fs.start_edges();
            for (const edge& e : active.edges)
                if (std::find(start.begin(), start.end(), e) == start.end()) final_state.push_back(e);
            for (const edge& e : fs.final_edges()) final_state.push_back(e);
            int seen = 0;
            for (int i = 0; i < 4; ++i) seen += point_sees_point(pts, final_state, c.channel_point, fs.inner[i]);
            rec.add("g: channel point sees inner points in final configuration", name, "4", std::to_string(seen), seen == 4);

            bool clockwise = true;
            for (int t = 0; t < 3; ++t)
                clockwise = clockwise && orient(pts[c.channel_point], pts[fi(q + t)], pts[fi(q + t + 1)]) < 0;
            rec.add("g: clockwise order of inner points", name, "clockwise", clockwise ? "clockwise" : "not clockwise",
                    clockwise);

            const gadget_side side = c.above ? gadget_side::below : gadget_side::above;
            std::string observed = "ok";
            bool ok = true;
            try {
                plane_matching m = active;
                for (const flip_move& f : five_flip_sequence(inst, layout, c.owner, side, active))
                    m = apply_flip(pts, m, f);
                ok = classify_configuration(m, fs) == configuration::final && contains_edge(m, c.e);
                if (!ok) observed = "wrong end state";
            } catch (const std::exception& ex) {
                ok = false;
                observed = ex.what();
            }
            rec.add("g: five-flip transformation", name, "five legal flips to final configuration", observed, ok);
        }
    }
}

}  // namespace

audit_report audit(const reduction_instance& inst) {
    recorder rec;
    check_valid(inst, rec);
    instance_layout layout;
    try {
        layout = recover_layout(inst);
        rec.add("layout", "instance", "gadgets recoverable from annotations", "ok", true);
    } catch (const std::exception& ex) {
        rec.add("layout", "instance", "gadgets recoverable from annotations", ex.what(), false);
        return rec.report;
    }
    check_matching_difference(inst, layout, rec);
    check_shapes(inst, layout, rec);

    std::vector<int> partner(inst.points.size(), -1);
    for (const edge& e : inst.m1.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= int(partner.size()) || e.v >= int(partner.size())) continue;
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }
    const segment_index m1(inst.points, inst.m1.edges);
    check_a(m1, layout, rec);
    check_b(inst, layout, rec);
    check_c(inst, layout, m1, partner, rec);
    check_d(layout, m1, rec);
    check_e(inst, layout, m1, rec);
    check_f(inst, layout, rec);
    check_g(inst, layout, rec);
    return rec.report;
}

}  // namespace matchflip
