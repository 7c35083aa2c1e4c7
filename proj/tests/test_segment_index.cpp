#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "matchflip/matching.h"
#include "matchflip/reduction.h"
#include "matchflip/segment_index.h"
#include "oracles.h"

using namespace matchflip;

namespace {

/// Random non-crossing horizontal and vertical segments on a grid, plus
/// scattered free points.
point_set random_layout(std::mt19937& rng, std::vector<edge>& edges, int segments, int free_points) {
    point_set pts;
    std::uniform_int_distribution<int> c(0, 400), len(1, 60);
    std::set<point> used;
    for (int t = 0; t < segments; ++t) {
        const point a{c(rng), c(rng)};
        const point b = (t % 2) ? point{a.x + len(rng), a.y} : point{a.x, a.y + len(rng)};
        bool ok = !used.count(a) && !used.count(b);
        for (const edge& e : edges) ok = ok && !oracle::segments_cross(a, b, pts[e.u], pts[e.v]);
        if (!ok) continue;
        used.insert(a);
        used.insert(b);
        pts.push_back(a);
        pts.push_back(b);
        edges.push_back(make_edge(int(pts.size()) - 2, int(pts.size()) - 1));
    }
    for (int t = 0; t < free_points; ++t) {
        const point p{c(rng), c(rng)};
        if (used.insert(p).second) pts.push_back(p);
    }
    return pts;
}

}  // namespace

TEST_CASE("segment index agrees with brute-force sight and crossing counts") {
    std::mt19937 rng(314);
    for (int round = 0; round < 5; ++round) {
        std::vector<edge> edges;
        const point_set pts = random_layout(rng, edges, 200, 40);
        const segment_index idx(pts, edges);
        std::uniform_int_distribution<int> pick(0, int(pts.size()) - 1);
        for (int q = 0; q < 2000; ++q) {
            const int a = pick(rng), b = pick(rng);
            CHECK(idx.sees(a, b) == point_sees_point(pts, edges, a, b));
            const int full = crossing_count(pts, edges, a, b);
            CHECK(idx.crossings(a, b, 1 << 30) == full);
            CHECK(idx.crossings(a, b, 3) == std::min(full, 3));
        }
    }
}

TEST_CASE("segment index on a reduction instance") {
    const reduction_instance inst = reduce(planar_graph_input{3, {{0, 1}, {1, 2}}}, 1);
    const segment_index idx(inst.points, inst.m1.edges);
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> pick(0, int(inst.points.size()) - 1);
    for (int q = 0; q < 300; ++q) {
        const int a = pick(rng), b = pick(rng);
        CHECK(idx.sees(a, b) == point_sees_point(inst.points, inst.m1.edges, a, b));
        CHECK(idx.crossings(a, b, 1 << 30) == crossing_count(inst.points, inst.m1.edges, a, b));
    }
}

TEST_CASE("grid-based validation matches the oracle on large matchings") {
    std::mt19937 rng(99);
    for (int round = 0; round < 20; ++round) {
        std::vector<edge> edges;
        point_set pts = random_layout(rng, edges, 150, 0);
        REQUIRE(edges.size() >= 64);
        plane_matching m = make_matching(edges);
        CHECK(validate(pts, m).empty() == oracle::plane_perfect(pts, m.edges));
        // Break it: move one endpoint onto another segment, or reconnect two edges across.
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const edge a = edges[pick(rng)], b = edges[pick(rng)];
        if (a == b) continue;
        std::vector<edge> crossed = edges;
        std::erase(crossed, a);
        std::erase(crossed, b);
        crossed.push_back(make_edge(a.u, b.v));
        crossed.push_back(make_edge(a.v, b.u));
        const plane_matching mc = make_matching(crossed);
        CHECK(validate(pts, mc).empty() == oracle::plane_perfect(pts, mc.edges));
        point_set moved = pts;
        moved[a.u] = pts[b.u];
        moved[a.u].x += (pts[b.u].x == pts[b.v].x) ? 0 : 1;
        moved[a.u].y += (pts[b.u].x == pts[b.v].x) ? 1 : 0;
        if (std::count(pts.begin(), pts.end(), moved[a.u]) == 0)
            CHECK(validate(moved, m).empty() == oracle::plane_perfect(moved, m.edges));
    }
}
