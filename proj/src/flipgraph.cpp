#include "matchflip/flipgraph.h"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace matchflip {

std::size_t default_node_cap() {
    if (const char* env = std::getenv("MATCHFLIP_NODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::size_t(v);
    }
    return 10'000'000;
}

namespace {

// Search space view: the movable part of a matching plus the edges that never move.
struct search_space {
    const point_set& pts;
    std::vector<char> movable;
    std::vector<edge> fixed;

    bool is_movable(const edge& e) const { return movable[e.u] && movable[e.v]; }
};

using state = std::vector<edge>;

// Big-endian fixed width, so byte order equals lexicographic order of the edge list.
std::string encode(const state& s) {
    std::string out;
    out.reserve(s.size() * 4);
    for (const edge& e : s)
        for (int v : {e.u, e.v}) {
            out.push_back(char((v >> 8) & 0xff));
            out.push_back(char(v & 0xff));
        }
    return out;
}

state decode(const std::string& k) {
    state s(k.size() / 4);
    auto byte = [&](std::size_t i) { return int(static_cast<unsigned char>(k[i])); };
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = edge{(byte(4 * i) << 8) | byte(4 * i + 1), (byte(4 * i + 2) << 8) | byte(4 * i + 3)};
    return s;
}

bool fits(const search_space& sp, const state& s, std::size_t i, std::size_t j, const edge& e3,
          const edge& e4) {
    const point_set& pts = sp.pts;
    const point a = pts[e3.u], b = pts[e3.v], c = pts[e4.u], d = pts[e4.v];
    if (segments_cross(a, b, c, d)) return false;
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (x == i || x == j) continue;
        const point p = pts[s[x].u], q = pts[s[x].v];
        if (segments_cross(a, b, p, q) || segments_cross(c, d, p, q)) return false;
    }
    for (const edge& f : sp.fixed) {
        const point p = pts[f.u], q = pts[f.v];
        if (segments_cross(a, b, p, q) || segments_cross(c, d, p, q)) return false;
    }
    return !passes_through_point(pts, e3.u, e3.v) && !passes_through_point(pts, e4.u, e4.v);
}

struct neighbor {
    flip_move move;
    state next;
};

std::vector<neighbor> neighbors(const search_space& sp, const state& s) {
    std::vector<neighbor> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const int a = s[i].u, b = s[i].v, c = s[j].u, d = s[j].v;
            const edge options[2][2] = {{make_edge(a, c), make_edge(b, d)},
                                        {make_edge(a, d), make_edge(b, c)}};
            for (const auto& opt : options) {
                edge e3 = opt[0], e4 = opt[1];
                if (e4 < e3) std::swap(e3, e4);
                if (!fits(sp, s, i, j, e3, e4)) continue;
                state next;
                next.reserve(s.size());
                for (std::size_t x = 0; x < s.size(); ++x)
                    if (x != i && x != j) next.push_back(s[x]);
                next.push_back(e3);
                next.push_back(e4);
                std::sort(next.begin(), next.end());
                out.push_back({flip_move{{s[i], s[j]}, {e3, e4}}, std::move(next)});
            }
        }
    return out;
}

struct prepared {
    search_space space;
    state start;
    state goal;
    bool compatible = true;  // false when the fixed parts of m1 and m2 differ
};

prepared prepare(const point_set& pts, const plane_matching& m1, const plane_matching& m2,
                 const search_restriction& r) {
    prepared p{search_space{pts, std::vector<char>(pts.size(), 1), {}}, {}, {}, true};
    if (r.allowed_points) {
        std::fill(p.space.movable.begin(), p.space.movable.end(), 0);
        for (int i : *r.allowed_points) p.space.movable.at(i) = 1;
        for (const edge& e : r.whitelisted_edges) {
            p.space.movable.at(e.u) = 1;
            p.space.movable.at(e.v) = 1;
        }
    }
    std::vector<edge> fixed2;
    for (const edge& e : m1.edges) (p.space.is_movable(e) ? p.start : p.space.fixed).push_back(e);
    for (const edge& e : m2.edges) (p.space.is_movable(e) ? p.goal : fixed2).push_back(e);
    // Edges with one endpoint inside the subset can never move, so they must agree too.
    p.compatible = p.space.fixed == fixed2;
    return p;
}

plane_matching merge(const state& s, const std::vector<edge>& fixed) {
    std::vector<edge> all = s;
    all.insert(all.end(), fixed.begin(), fixed.end());
    return make_matching(std::move(all));
}

using depth_map = std::unordered_map<std::string, int>;

// Walks from x towards depth 0 of `dist`, picking the smallest key at every step.
std::vector<std::pair<flip_move, std::string>> descend(const search_space& sp,
                                                       const depth_map& dist, std::string x) {
    std::vector<std::pair<flip_move, std::string>> path;
    int d = dist.at(x);
    while (d > 0) {
        std::optional<std::pair<flip_move, std::string>> best;
        for (auto& nb : neighbors(sp, decode(x))) {
            std::string k = encode(nb.next);
            auto it = dist.find(k);
            if (it == dist.end() || it->second != d - 1) continue;
            if (!best || k < best->second) best = std::make_pair(nb.move, std::move(k));
        }
        path.push_back(*best);
        x = best->second;
        --d;
    }
    return path;
}

}  // namespace

distance_result flip_distance(const point_set& pts, const plane_matching& m1,
                              const plane_matching& m2, const search_restriction& r,
                              std::size_t node_cap) {
    prepared p = prepare(pts, m1, m2, r);
    distance_result res;
    res.witness.start = m1;
    if (!p.compatible) return res;

    const std::string s = encode(p.start), t = encode(p.goal);
    depth_map fwd{{s, 0}}, bwd{{t, 0}};
    std::vector<std::string> ff{s}, bf{t};
    int fd = 0, bd = 0;
    const int limit = r.max_depth.value_or(-1);

    std::vector<std::string> meeting;
    if (s == t) meeting.push_back(s);
    while (meeting.empty()) {
        if (ff.empty() || bf.empty()) {
            res.states = fwd.size() + bwd.size();
            return res;
        }
        if (limit >= 0 && fd + bd >= limit) {
            res.states = fwd.size() + bwd.size();
            res.depth_bound_hit = true;
            return res;
        }
        const bool forward = ff.size() <= bf.size();
        depth_map& mine = forward ? fwd : bwd;
        const depth_map& other = forward ? bwd : fwd;
        std::vector<std::string>& frontier = forward ? ff : bf;
        int& depth = forward ? fd : bd;
        std::vector<std::string> next;
        for (const std::string& k : frontier)
            for (auto& nb : neighbors(p.space, decode(k))) {
                std::string key = encode(nb.next);
                if (mine.count(key)) continue;
                mine.emplace(key, depth + 1);
                next.push_back(std::move(key));
                if (fwd.size() + bwd.size() > node_cap)
                    throw resource_exhausted("flip search exceeded node cap of " +
                                             std::to_string(node_cap) + " states");
            }
        ++depth;
        frontier = std::move(next);
        std::sort(frontier.begin(), frontier.end());
        int best = -1;
        for (const std::string& k : frontier) {
            auto it = other.find(k);
            if (it == other.end()) continue;
            int total = depth + it->second;
            if (best < 0 || total < best) {
                best = total;
                meeting.clear();
            }
            if (total == best) meeting.push_back(k);
        }
    }
    // Any state known to both sides with minimal depth sum may serve as the midpoint.
    int best = -1;
    std::string mid;
    for (const auto& [k, d1] : fwd) {
        auto it = bwd.find(k);
        if (it == bwd.end()) continue;
        int total = d1 + it->second;
        if (best < 0 || total < best || (total == best && k < mid)) {
            best = total;
            mid = k;
        }
    }
    auto back = descend(p.space, fwd, mid);
    auto ahead = descend(p.space, bwd, mid);
    std::vector<flip_move> moves;
    for (auto it = back.rbegin(); it != back.rend(); ++it) moves.push_back(reversed(it->first));
    for (auto& [mv, k] : ahead) moves.push_back(mv);
    res.reachable = true;
    res.distance = best;
    res.witness.moves = std::move(moves);
    res.states = fwd.size() + bwd.size();
    return res;
}

verify_report verify_sequence(const point_set& pts, const flip_sequence& seq,
                              const plane_matching& target) {
    verify_report rep;
    if (!validate(pts, seq.start).empty()) {
        rep.failed_move = 0;
        rep.message = "start matching is not a plane perfect matching";
        return rep;
    }
    plane_matching cur = seq.start;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        if (!flip_is_legal(pts, cur, seq.moves[i])) {
            rep.failed_move = int(i);
            rep.message = "move " + std::to_string(i) + " is not a legal flip";
            return rep;
        }
        cur = apply_flip_unchecked(cur, seq.moves[i]);
    }
    if (canonical_key(cur) != canonical_key(target)) {
        rep.message = "final matching differs from target";
        return rep;
    }
    rep.ok = true;
    return rep;
}

int crossing_lower_bound(const point_set& pts, const plane_matching& m1, const plane_matching& m2) {
    int x = 0;
    for (const edge& e : m2.edges) x = std::max(x, crossing_count(pts, m1.edges, e.u, e.v));
    return (x + 1) / 2;
}

bounded_result depth_bounded_search(const point_set& pts, const plane_matching& m1,
                                    const plane_matching& m2, const search_restriction& r,
                                    int max_depth, const transition_observer& observer) {
    prepared p = prepare(pts, m1, m2, r);
    bounded_result res;
    if (!p.compatible) return res;
    const std::string goal = encode(p.goal);
    for (int limit = 0; limit <= max_depth; ++limit) {
        // Remaining budget already explored from a state; revisits with no more budget are pruned.
        std::unordered_map<std::string, int> seen;
        std::function<bool(const state&, int)> dfs = [&](const state& s, int budget) -> bool {
            std::string k = encode(s);
            if (k == goal) return true;
            if (budget == 0) return false;
            auto it = seen.find(k);
            if (it != seen.end() && it->second >= budget) return false;
            seen[k] = budget;
            for (auto& nb : neighbors(p.space, s)) {
                ++res.transitions;
                if (observer)
                    observer(merge(s, p.space.fixed), nb.move, merge(nb.next, p.space.fixed));
                if (dfs(nb.next, budget - 1)) return true;
            }
            return false;
        };
        if (dfs(p.start, limit)) {
            res.found = true;
            res.length = limit;
            return res;
        }
    }
    return res;
}

}  // namespace matchflip
