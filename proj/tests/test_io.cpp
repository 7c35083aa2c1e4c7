#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "matchflip/io.h"

using namespace matchflip;

namespace {

std::string to_text(const reduction_instance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

reduction_instance from_text(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

graph_file graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string parse_message(const std::string& text) {
    try {
        from_text(text);
    } catch (const parse_error& ex) {
        return ex.what();
    }
    return "no error";
}

const std::string square =
    "# a unit square\n"
    "points 4\n0 0\n1 0\n1 1\n0 1\n"
    "matching m1 2\n0 1\n2 3\n"
    "matching m2 2\n0 3\n1 2\n"
    "k 1\n";

}  // namespace

TEST_CASE("instance files round-trip losslessly") {
    for (const auto& [g, c] : {std::pair{planar_graph_input{2, {{0, 1}}}, 1},
                               std::pair{planar_graph_input{3, {{0, 1}, {1, 2}}}, 1},
                               std::pair{planar_graph_input{4, {{0, 2}}}, 1}}) {
        const reduction_instance inst = reduce(g, c);
        const std::string text = to_text(inst);
        const reduction_instance back = from_text(text);
        CHECK(back == inst);
        CHECK(to_text(back) == text);
    }
    const reduction_instance dropped = reduce(planar_graph_input{4, {{0, 2}}}, 1);
    CHECK(to_text(dropped).find("dropped-vertices 2\n1\n3\n") != std::string::npos);
}

TEST_CASE("a bare instance with comments and no annotations parses") {
    const reduction_instance inst = from_text(square);
    CHECK(inst.points.size() == 4);
    CHECK(inst.k == 1);
    CHECK(inst.annotations.empty());
    CHECK(inst.m2.edges == std::vector<edge>{{0, 3}, {1, 2}});
    CHECK(from_text(to_text(inst)) == inst);
    CHECK(from_text("\n  # leading\r\n" + square + "\n# trailing\n") == inst);
}

TEST_CASE("instance parse errors name the offending line") {
    auto replace = [](std::string s, const std::string& from, const std::string& to) {
        return s.replace(s.find(from), from.size(), to);
    };
    CHECK(parse_message(replace(square, "points 4", "points 3")).find("odd number") != std::string::npos);
    CHECK(parse_message(replace(square, "matching m1 2\n0 1", "matching m1 2\n0 9")) ==
          "line 8: point index out of range");
    CHECK(parse_message(replace(square, "2 3\nmatching m2", "1 3\nmatching m2")) ==
          "line 9: matching m1 uses a point twice");
    CHECK(parse_message(replace(square, "matching m1 2", "matching m1 3")).find("line 7:") == 0);
    CHECK(parse_message(replace(square, "matching m2", "matching m3")).find("expected matching m2") !=
          std::string::npos);
    CHECK(parse_message(replace(square, "1 1\n", "1 x\n")) == "line 5: not an integer: 'x'");
    CHECK(parse_message(replace(square, "1 1\n", "1 1 1\n")) == "line 5: expected 2 fields, found 3");
    CHECK(parse_message(replace(square, "k 1", "k -1")).find("negative k") != std::string::npos);
    CHECK(parse_message(square + "extra\n") == "line 14: unexpected content 'extra'");
    CHECK(parse_message(square.substr(0, square.find("k 1"))).find("end of input") != std::string::npos);
    CHECK(parse_message(square + "annotations\n0 flip-structure e0\n1 blocker e0\n2 bogus e0\n3 blocker e0\n") ==
          "line 17: unknown role 'bogus'");
    CHECK(parse_message(square + "annotations\n0 blocker e0\n2 blocker e0\n").find("in order") != std::string::npos);
    CHECK(parse_message(square + "annotations\n0 blocker q0\n").find("malformed owner") != std::string::npos);
    CHECK(parse_message(replace(square, "0 0\n1 0", "0 0\n" + std::to_string(max_abs_coordinate + 1) + " 0"))
              .find("coordinate out of range") != std::string::npos);
}

TEST_CASE("graph files round-trip and reject malformed graphs") {
    const graph_file g{{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}, 2};
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "graph 4 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\ncover-budget 2\n");
    CHECK(graph_from_text(out.str()) == g);
    CHECK_THROWS_AS(graph_from_text("graph 2 1\nedge 0 2\ncover-budget 1\n"), parse_error);
    CHECK_THROWS_AS(graph_from_text("graph 2 1\nedge 0 0\ncover-budget 1\n"), parse_error);
    CHECK_THROWS_AS(graph_from_text("graph 2 2\nedge 0 1\nedge 1 0\ncover-budget 1\n"), parse_error);
    CHECK_THROWS_AS(graph_from_text("graph 2 1\nedge 0 1\n"), parse_error);
    CHECK_THROWS_AS(graph_from_text("graph 2 1\nedge 0 1\ncover-budget -1\n"), parse_error);
    CHECK_THROWS_AS(graph_from_text("graph 2 1\nvertex 0 1\ncover-budget 1\n"), parse_error);
}

TEST_CASE("move lists round-trip") {
    const reduction_instance inst = reduce(planar_graph_input{2, {{0, 1}}}, 1);
    const flip_sequence seq = witness_sequence(inst, {0});
    std::ostringstream out;
    write_moves(out, seq.moves);
    std::istringstream in(out.str());
    const auto back = read_moves(in);
    CHECK(back == seq.moves);
    std::istringstream bad("1 2 3 4 5 6 7\n");
    CHECK_THROWS_AS(read_moves(bad), parse_error);
}

TEST_CASE("files on disk: save, load and missing paths") {
    const auto dir = std::filesystem::temp_directory_path() / "matchflip_io_test";
    std::filesystem::create_directories(dir);
    const reduction_instance inst = reduce(planar_graph_input{2, {{0, 1}}}, 1);
    save_instance((dir / "k2.inst").string(), inst);
    CHECK(load_instance((dir / "k2.inst").string()) == inst);
    const graph_file g{{2, {{0, 1}}}, 1};
    save_graph((dir / "k2.graph").string(), g);
    CHECK(load_graph((dir / "k2.graph").string()) == g);
    CHECK_THROWS_AS(load_instance((dir / "missing.inst").string()), io_error);
    CHECK_THROWS_AS(save_graph((dir / "no" / "such" / "dir.graph").string(), g), io_error);
    std::filesystem::remove_all(dir);
}
