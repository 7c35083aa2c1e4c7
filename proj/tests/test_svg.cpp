#include <regex>
#include <string>

#include "doctest.h"
#include "matchflip/svg.h"

using namespace matchflip;

namespace {

int count_of(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("K2 renders one edge gadget and two vertex gadgets") {
    const reduction_instance inst = reduce(planar_graph_input{2, {{0, 1}}}, 1);
    const std::string svg = render_svg(inst);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(count_of(svg, "class=\"edge-gadget\"") == 1);
    CHECK(count_of(svg, "class=\"vertex-gadget\"") == 2);
    CHECK(count_of(svg, "<circle") == int(inst.points.size()));
    // Every m1 edge, plus the m2 edges that differ from m1, dashed.
    CHECK(count_of(svg, "<line") == int(inst.m1.edges.size()) + 4);
    CHECK(count_of(svg, "stroke-dasharray") == 4);
    CHECK(svg.size() >= 6);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("role colors follow the legend") {
    CHECK(role_color(point_role::flip_structure) == "#d62728");
    CHECK(role_color(point_role::blocker) == "#000000");
    CHECK(role_color(point_role::separator) == "#1f4fd6");
}

TEST_CASE("layer filter keeps only the selected roles") {
    const reduction_instance inst = reduce(planar_graph_input{2, {{0, 1}}}, 1);
    render_options opt;
    opt.layers = {point_role::flip_structure};
    opt.show_m2 = false;
    const std::string svg = render_svg(inst, opt);
    const std::regex color("(stroke|fill)=\"(#[0-9a-f]{6})\"");
    int seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), color); it != std::sregex_iterator(); ++it, ++seen)
        CHECK((*it)[2] == "#d62728");
    CHECK(seen == 8 + 4);
    CHECK(count_of(svg, "vertex-gadget") == 0);
}

TEST_CASE("an empty instance renders a valid blank canvas") {
    const std::string svg = render_svg(reduction_instance{});
    CHECK(svg.find("viewBox=\"0 0 100 100\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    const reduction_instance a = reduce(planar_graph_input{3, {{0, 1}, {1, 2}}}, 1);
    const reduction_instance b = reduce(planar_graph_input{3, {{0, 1}, {1, 2}}}, 1);
    CHECK(render_svg(a) == render_svg(b));
    CHECK(render_svg(a) == render_svg(a));
}
