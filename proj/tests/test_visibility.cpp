#include <array>
#include <random>

#include "doctest.h"
#include "matchflip/visibility.h"

using namespace matchflip;

namespace {

planar_graph_input complete(int n) {
    planar_graph_input g{n, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
    return g;
}

/// Stacked triangulation on n vertices with some edges removed.
planar_graph_input random_planar(std::mt19937& rng, int n, double keep) {
    planar_graph_input g{n, {{0, 1}, {1, 2}, {0, 2}}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const std::size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        g.edges.push_back({a, v});
        g.edges.push_back({b, v});
        g.edges.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    std::bernoulli_distribution coin(keep);
    planar_graph_input out{n, {}};
    for (const edge& e : g.edges)
        if (coin(rng)) out.edges.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("planarity of small graphs") {
    CHECK(planarity_test(complete(4)).planar);
    auto k5 = planarity_test(complete(5));
    CHECK_FALSE(k5.planar);
    CHECK_FALSE(k5.certificate.empty());
    planar_graph_input k33{6, {}};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.edges.push_back({a, b});
    CHECK_FALSE(planarity_test(k33).planar);
    planar_graph_input chorded{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}};
    CHECK(planarity_test(chorded).planar);
}

TEST_CASE("malformed graph input is rejected") {
    CHECK_THROWS_AS(check_graph_input({2, {{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(check_graph_input({2, {{0, 1}, {1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(check_graph_input({2, {{0, 2}}}), std::invalid_argument);
}

TEST_CASE("st-numbering of maximal planar graphs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_planar(rng, 3 + trial % 20, 1.0);
        auto num = st_numbering(g, 0, 1);
        CHECK(is_st_numbering(g, num));
        CHECK(num[0] == 1);
        CHECK(num[1] == g.n);
    }
    CHECK_THROWS(st_numbering(planar_graph_input{3, {{0, 1}, {1, 2}}}, 0, 2));
}

TEST_CASE("visibility representation of K2 and P3") {
    planar_graph_input k2{2, {{0, 1}}};
    auto r = build_visibility_rep(k2);
    CHECK(check_visibility_rep(k2, r).empty());
    CHECK(r.vertices[0].y != r.vertices[1].y);
    planar_graph_input p3{3, {{0, 1}, {1, 2}}};
    auto rp = build_visibility_rep(p3);
    CHECK(check_visibility_rep(p3, rp).empty());
    CHECK(rp.edges[0].x != rp.edges[1].x);
}

TEST_CASE("visibility representation rejects K5 with a certificate") {
    try {
        build_visibility_rep(complete(5));
        FAIL("expected nonplanar_graph");
    } catch (const nonplanar_graph& e) {
        CHECK_FALSE(e.certificate.empty());
    }
}

TEST_CASE("visibility representations of random planar graphs pass the checker") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 25;
        auto g = n < 3 ? planar_graph_input{n, {}} : random_planar(rng, n, 0.6);
        auto r = build_visibility_rep(g);
        auto problems = check_visibility_rep(g, r);
        CHECK_MESSAGE(problems.empty(), (problems.empty() ? "" : problems.front()));
        // Grid side bound: width < 3n, height < n.
        CHECK(grid_side(r) <= 3 * n);
    }
}

TEST_CASE("checker catches broken representations") {
    planar_graph_input p3{3, {{0, 1}, {1, 2}}};
    auto r = build_visibility_rep(p3);
    auto moved = r;
    moved.edges[0].x = moved.vertices[moved.edges[0].bottom_vertex].x_right + 5;
    CHECK_FALSE(check_visibility_rep(p3, moved).empty());
    auto shared = r;
    shared.edges[1].x = shared.edges[0].x;
    CHECK_FALSE(check_visibility_rep(p3, shared).empty());
}

TEST_CASE("stretch is identity at zero, order-insensitive and invariant-preserving") {
    planar_graph_input k4 = complete(4);
    auto r = build_visibility_rep(k4);
    auto same = stretch(r, {{0, 0}, {2, 0}}, {{1, 0}});
    CHECK(check_visibility_rep(k4, same).empty());
    for (std::size_t v = 0; v < r.vertices.size(); ++v) {
        CHECK(same.vertices[v].y == r.vertices[v].y);
        CHECK(same.vertices[v].x_left == r.vertices[v].x_left);
    }
    auto a = stretch(r, {{1, 5}, {2, 3}}, {{1, 4}, {3, 2}});
    auto b = stretch(r, {{2, 3}, {1, 5}}, {{3, 2}, {1, 4}});
    CHECK(check_visibility_rep(k4, a).empty());
    for (std::size_t v = 0; v < r.vertices.size(); ++v) {
        CHECK(a.vertices[v].y == b.vertices[v].y);
        CHECK(a.vertices[v].x_left == b.vertices[v].x_left);
        CHECK(a.vertices[v].x_right == b.vertices[v].x_right);
    }
    // Five rows inserted between the two lowest rows.
    auto five = stretch(r, {{1, 5}}, {});
    int low = -1, next = -1;
    for (int v = 0; v < 4; ++v) {
        if (r.vertices[v].y == 0) low = v;
        if (r.vertices[v].y == 1) next = v;
    }
    CHECK(five.vertices[next].y - five.vertices[low].y == 6);
    CHECK_THROWS_AS(stretch(r, {{1, -1}}, {}), std::invalid_argument);
}

TEST_CASE("disconnected graphs are laid out side by side") {
    planar_graph_input g{7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}}};
    auto r = build_visibility_rep(g);
    CHECK(check_visibility_rep(g, r).empty());
    CHECK(r.vertices[6].x_right - r.vertices[6].x_left == 1);
}
