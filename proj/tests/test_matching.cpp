#include <random>
#include <set>

#include "doctest.h"
#include "matchflip/matching.h"
#include "oracles.h"

using namespace matchflip;

TEST_CASE("validate reports each violation kind") {
    point_set pts{{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    CHECK(validate(pts, make_matching({{0, 2}, {1, 3}})).empty());
    auto crossing = validate(pts, make_matching({{0, 1}, {2, 3}}));
    REQUIRE(crossing.size() == 1);
    CHECK(crossing[0].what == violation::kind::crossing);
    auto unmatched = validate(pts, make_matching({{0, 2}}));
    CHECK(unmatched.size() == 2);
    CHECK(unmatched[0].what == violation::kind::unmatched);
    auto twice = validate(pts, make_matching({{0, 2}, {0, 3}, {1, 3}}));
    CHECK_FALSE(twice.empty());
    auto out = validate(pts, make_matching({{0, 7}, {1, 3}}));
    CHECK(out.front().what == violation::kind::index_out_of_range);
    point_set line{{0, 0}, {1, 0}, {2, 0}, {3, 5}};
    auto through = validate(line, make_matching({{0, 2}, {1, 3}}));
    REQUIRE_FALSE(through.empty());
    CHECK(through[0].what == violation::kind::through_point);
}

TEST_CASE("square flips to its other plane matching in one move") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    plane_matching vertical = make_matching({{0, 1}, {2, 3}});
    auto flips = enumerate_flips(pts, vertical);
    REQUIRE(flips.size() == 1);
    plane_matching next = apply_flip(pts, vertical, flips[0]);
    CHECK(next == make_matching({{0, 2}, {1, 3}}));
    CHECK(apply_flip(pts, next, reversed(flips[0])) == vertical);
}

TEST_CASE("illegal flips are rejected") {
    point_set pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    plane_matching m = make_matching({{0, 1}, {2, 3}});
    flip_move crossing{{make_edge(0, 1), make_edge(2, 3)}, {make_edge(0, 3), make_edge(1, 2)}};
    CHECK_FALSE(flip_is_legal(pts, m, crossing));
    CHECK_THROWS_AS(apply_flip(pts, m, crossing), invalid_flip);
    flip_move absent{{make_edge(0, 2), make_edge(1, 3)}, {make_edge(0, 1), make_edge(2, 3)}};
    CHECK_FALSE(flip_is_legal(pts, m, absent));
}

namespace {

std::set<std::vector<edge>> library_flips(const point_set& pts, const plane_matching& m) {
    std::set<std::vector<edge>> out;
    for (const flip_move& f : enumerate_flips(pts, m)) {
        REQUIRE(flip_is_legal(pts, m, f));
        out.insert(apply_flip_unchecked(m, f).edges);
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_flips matches brute force on random small point sets") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(0, 5);
    int instances = 0;
    while (instances < 60) {
        std::set<point> chosen;
        const int n = 2 * std::uniform_int_distribution<int>(2, 4)(rng);
        while (int(chosen.size()) < n) chosen.insert({c(rng), c(rng)});
        point_set pts(chosen.begin(), chosen.end());
        auto all = oracle::all_plane_matchings(pts);
        if (all.empty()) continue;
        ++instances;
        for (const auto& m : all) {
            plane_matching pm = make_matching(m);
            REQUIRE(validate(pts, pm).empty());
            CHECK(library_flips(pts, pm) == oracle::brute_force_flips(pts, m));
        }
    }
}

TEST_CASE("every flip is a 4-gon re-pairing and is reversible") {
    point_set pts{{0, 0}, {3, 1}, {1, 4}, {5, 5}, {6, 0}, {2, 2}};
    for (const auto& m : oracle::all_plane_matchings(pts)) {
        plane_matching pm = make_matching(m);
        for (const flip_move& f : enumerate_flips(pts, pm)) {
            std::set<int> before{f.removed[0].u, f.removed[0].v, f.removed[1].u, f.removed[1].v};
            std::set<int> after{f.added[0].u, f.added[0].v, f.added[1].u, f.added[1].v};
            CHECK(before.size() == 4);
            CHECK(before == after);
            plane_matching next = apply_flip(pts, pm, f);
            CHECK(validate(pts, next).empty());
            CHECK(apply_flip(pts, next, reversed(f)) == pm);
        }
    }
}
