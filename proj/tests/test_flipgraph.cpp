#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "matchflip/flipgraph.h"
#include "oracles.h"

using namespace matchflip;

namespace {

/// Plain single-direction BFS over brute-force neighbors.
int oracle_distance(const point_set& pts, const plane_matching& a, const plane_matching& b) {
    std::map<std::vector<edge>, int> dist{{a.edges, 0}};
    std::deque<std::vector<edge>> q{a.edges};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        if (cur == b.edges) return dist[cur];
        for (const auto& next : oracle::brute_force_flips(pts, cur))
            if (dist.emplace(next, dist[cur] + 1).second) q.push_back(next);
    }
    return -1;
}

// Flip-structure coordinates: outer points f0..f3 then inner points f'0..f'3.
point_set flip_structure_points() {
    return {{320, 640}, {640, -320}, {-320, -640}, {-640, 320},
            {160, -160}, {-160, -160}, {-160, 160}, {160, 160}};
}

plane_matching start_edges() { return make_matching({{0, 4}, {1, 5}, {2, 6}, {3, 7}}); }
plane_matching final_edges() { return make_matching({{0, 7}, {1, 4}, {2, 5}, {3, 6}}); }

}  // namespace

TEST_CASE("identical matchings are at distance zero") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    plane_matching m = make_matching({{0, 1}, {2, 3}});
    auto r = flip_distance(pts, m, m);
    CHECK(r.reachable);
    CHECK(r.distance == 0);
    CHECK(r.witness.moves.empty());
    CHECK(verify_sequence(pts, r.witness, m).ok);
}

TEST_CASE("square verticals to horizontals takes one flip") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto r = flip_distance(pts, make_matching({{0, 1}, {2, 3}}), make_matching({{0, 2}, {1, 3}}));
    CHECK(r.distance == 1);
    CHECK(r.witness.moves.size() == 1);
}

TEST_CASE("isolated flip structure needs four flips") {
    point_set pts = flip_structure_points();
    CHECK(validate(pts, start_edges()).empty());
    CHECK(validate(pts, final_edges()).empty());
    const int want = oracle_distance(pts, start_edges(), final_edges());
    CHECK(want == 4);
    auto r = flip_distance(pts, start_edges(), final_edges());
    CHECK(r.reachable);
    CHECK(r.distance == want);
    CHECK(verify_sequence(pts, r.witness, final_edges()).ok);
    CHECK(r.states <= 41);
}

TEST_CASE("verify_sequence reports the first illegal move") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    plane_matching m = make_matching({{0, 1}, {2, 3}});
    flip_sequence seq{m, {flip_move{{make_edge(0, 1), make_edge(2, 3)},
                                    {make_edge(0, 3), make_edge(1, 2)}}}};
    auto rep = verify_sequence(pts, seq, m);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failed_move == 0);
    auto mismatch = verify_sequence(pts, flip_sequence{m, {}}, make_matching({{0, 2}, {1, 3}}));
    CHECK_FALSE(mismatch.ok);
    CHECK(mismatch.failed_move == -1);
}

TEST_CASE("restriction and depth bound") {
    // Two far-apart squares; only the left one may move.
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {10, 0}, {10, 1}, {11, 0}, {11, 1}};
    plane_matching a = make_matching({{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    plane_matching b = make_matching({{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    CHECK(flip_distance(pts, a, b).distance == 2);
    search_restriction left;
    left.allowed_points = std::vector<int>{0, 1, 2, 3};
    auto r = flip_distance(pts, a, b, left);
    CHECK_FALSE(r.reachable);
    CHECK_FALSE(r.depth_bound_hit);
    left.whitelisted_edges = {make_edge(4, 5), make_edge(6, 7)};
    CHECK(flip_distance(pts, a, b, left).distance == 2);
    search_restriction shallow;
    shallow.max_depth = 1;
    auto s = flip_distance(pts, a, b, shallow);
    CHECK_FALSE(s.reachable);
    CHECK(s.depth_bound_hit);
}

TEST_CASE("node cap raises a resource error") {
    point_set pts = flip_structure_points();
    CHECK_THROWS_AS(flip_distance(pts, start_edges(), final_edges(), {}, 5), resource_exhausted);
}

TEST_CASE("random instances: oracle agreement, symmetry, lower bound, determinism") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(0, 7);
    int solved = 0;
    while (solved < 40) {
        std::set<point> chosen;
        const int n = 2 * std::uniform_int_distribution<int>(2, 4)(rng);
        while (int(chosen.size()) < n) chosen.insert({c(rng), c(rng)});
        point_set pts(chosen.begin(), chosen.end());
        auto all = oracle::all_plane_matchings(pts);
        if (all.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        plane_matching a = make_matching(all[pick(rng)]), b = make_matching(all[pick(rng)]);
        auto r = flip_distance(pts, a, b);
        const int want = oracle_distance(pts, a, b);
        CHECK(r.distance == want);
        if (!r.reachable) continue;
        ++solved;
        CHECK(verify_sequence(pts, r.witness, b).ok);
        CHECK(int(r.witness.moves.size()) == r.distance);
        CHECK(flip_distance(pts, b, a).distance == r.distance);
        CHECK(r.distance >= crossing_lower_bound(pts, a, b));
        auto again = flip_distance(pts, a, b);
        CHECK(again.witness.moves == r.witness.moves);
        auto bounded = depth_bounded_search(pts, a, b, {}, r.distance);
        CHECK(bounded.found);
        CHECK(bounded.length == r.distance);
        if (r.distance > 0) CHECK_FALSE(depth_bounded_search(pts, a, b, {}, r.distance - 1).found);
    }
}

TEST_CASE("crossing lower bound examples") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    plane_matching m = make_matching({{0, 1}, {2, 3}});
    CHECK(crossing_lower_bound(pts, m, m) == 0);
    // One long horizontal edge crossed by seven vertical edges.
    point_set line{{0, 0}, {8, 0}};
    std::vector<edge> vert, horiz{{0, 1}};
    for (int i = 1; i <= 7; ++i) {
        line.push_back({i, -1});
        line.push_back({i, 1});
    }
    // m1: verticals plus the two far points matched through a detour point pair.
    line.push_back({0, 5});
    line.push_back({8, 5});
    for (int i = 0; i < 7; ++i) vert.push_back({2 + 2 * i, 3 + 2 * i});
    std::vector<edge> m1 = vert, m2 = vert;
    m1.push_back({0, 16});
    m1.push_back({1, 17});
    m2.push_back({0, 1});
    m2.push_back({16, 17});
    CHECK(crossing_lower_bound(line, make_matching(m1), make_matching(m2)) == 4);
}
