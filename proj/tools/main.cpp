#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance_suite.h"
#include "matchflip/flipgraph.h"
#include "matchflip/gadgets.h"
#include "matchflip/io.h"
#include "matchflip/reduction.h"
#include "matchflip/svg.h"

using namespace matchflip;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_resource = 2;
constexpr int exit_io = 3;

/// Raised for outcomes that are answers rather than crashes: nonplanar input,
/// no witness, failed audit.
class domain_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct options {
    std::string graph_path;
    std::string instance_path;
    std::string output_path;
    std::optional<int> max_depth;
    std::optional<std::size_t> node_cap;
    std::vector<int> restrict_points;
    std::vector<std::string> layers;
    bool miniature = false;
};

void print_bbox(const reduction_instance& inst) {
    const bounding_box b = bbox(inst.points);
    std::cout << "bounding box: [" << b.min_x << ", " << b.max_x << "] x [" << b.min_y << ", " << b.max_y << "]\n";
}

void print_audit_summary(const audit_report& rep) {
    std::size_t failed = 0;
    for (const auto& r : rep.records) failed += r.passed ? 0 : 1;
    std::cout << "audit " << (failed == 0 ? "PASS" : "FAIL") << ": " << rep.records.size() - failed << "/"
              << rep.records.size() << " checks passed\n";
    for (const auto& r : rep.records)
        if (!r.passed)
            std::cout << "  FAIL " << r.check << " [" << r.gadget << "] expected " << r.expected << ", observed "
                      << r.observed << '\n';
}

int cmd_reduce(const options& o) {
    const graph_file g = load_graph(o.graph_path);
    reduction_instance inst;
    try {
        inst = reduce(g.graph, g.cover_budget);
    } catch (const nonplanar_graph& ex) {
        std::ostringstream cert;
        for (int e : ex.certificate)
            cert << ' ' << g.graph.edges[e].u << '-' << g.graph.edges[e].v;
        throw domain_failure("nonplanar graph; Kuratowski subgraph edges:" + cert.str());
    } catch (const std::invalid_argument& ex) {
        throw domain_failure(ex.what());
    }
    save_instance(o.output_path, inst);
    std::cout << "points: " << inst.points.size() << "\nk: " << inst.k << '\n';
    print_bbox(inst);
    const audit_report rep = audit(inst);
    print_audit_summary(rep);
    return rep.passed() ? exit_ok : exit_domain;
}

void check_instance_matches_graph(const instance_layout& layout, const graph_file& g) {
    if (layout.edges.size() != g.graph.edges.size())
        throw domain_failure("instance has " + std::to_string(layout.edges.size()) + " edge gadgets, graph has " +
                             std::to_string(g.graph.edges.size()) + " edges");
    for (const auto& er : layout.edges) {
        if (er.edge_id < 0 || er.edge_id >= int(g.graph.edges.size()))
            throw domain_failure("edge gadget " + std::to_string(er.edge_id) + " has no graph edge");
        const edge e = make_edge(g.graph.edges[er.edge_id].u, g.graph.edges[er.edge_id].v);
        if (make_edge(er.lower_vertex, er.upper_vertex) != e)
            throw domain_failure("edge gadget " + std::to_string(er.edge_id) + " does not connect the graph edge's ends");
    }
}

int cmd_witness(const options& o) {
    const graph_file g = load_graph(o.graph_path);
    const reduction_instance inst = load_instance(o.instance_path);
    instance_layout layout;
    try {
        layout = recover_layout(inst);
    } catch (const std::invalid_argument& ex) {
        throw domain_failure(std::string("instance has no usable annotations: ") + ex.what());
    }
    check_instance_matches_graph(layout, g);
    const auto cover = solve_vertex_cover(g.graph, g.cover_budget);
    if (!cover) {
        std::cout << "no witness (cover > c)\n";
        return exit_domain;
    }
    flip_sequence seq;
    try {
        seq = witness_sequence(inst, *cover);
    } catch (const precondition_error& ex) {
        throw domain_failure(ex.what());
    }
    if (o.output_path.empty()) {
        write_moves(std::cout, seq.moves);
    } else {
        std::ofstream out(o.output_path, std::ios::binary);
        if (!out) throw io_error("cannot write " + o.output_path);
        write_moves(out, seq.moves);
    }
    const verify_report v = verify_sequence(inst.points, seq, inst.m2);
    std::cout << "cover size: " << cover->size() << "\nlength: " << seq.moves.size() << '\n'
              << (v.ok ? "VERIFIED" : "NOT VERIFIED: " + v.message) << '\n';
    return v.ok ? exit_ok : exit_domain;
}

int cmd_flipdist_miniature(const options& o) {
    point_set pts;
    const edge_gadget g =
        build_edge_gadget(isolated_edge_slot(0, gadget_scale::miniature), 0, gadget_scale::miniature, pts);
    const plane_matching m1 = make_matching(g.start_matching_edges());
    std::vector<edge> final_edges;
    const auto start = g.flip.start_edges();
    for (const edge& e : m1.edges)
        if (std::find(start.begin(), start.end(), e) == start.end()) final_edges.push_back(e);
    for (const edge& e : g.flip.final_edges()) final_edges.push_back(e);
    const plane_matching m2 = make_matching(final_edges);
    const int depth = o.max_depth.value_or(3);
    int worst_step = 0;
    const bounded_result r =
        depth_bounded_search(pts, m1, m2, {}, depth, [&](const plane_matching& a, const flip_move&, const plane_matching& b) {
            worst_step = std::max(worst_step, std::abs(weight(b, g.flip) - weight(a, g.flip)));
        });
    std::cout << "miniature edge gadget (separator multiplicity 2, " << pts.size() << " points)\n";
    if (r.found)
        std::cout << "distance " << r.length << '\n';
    else
        std::cout << "no sequence of length <= " << depth << '\n';
    std::cout << "transitions: " << r.transitions << "\nmax |weight step|: " << worst_step << '\n';
    return exit_ok;
}

int cmd_flipdist(const options& o) {
    if (o.instance_path.empty()) {
        if (o.miniature) return cmd_flipdist_miniature(o);
        throw CLI::ValidationError("flipdist", "an instance file or --miniature is required");
    }
    const reduction_instance inst = load_instance(o.instance_path);
    for (const plane_matching* m : {&inst.m1, &inst.m2}) {
        const auto problems = validate(inst.points, *m);
        if (!problems.empty()) throw domain_failure("invalid matching: " + describe(problems.front()));
    }
    search_restriction r;
    if (!o.restrict_points.empty()) r.allowed_points = o.restrict_points;
    r.max_depth = o.max_depth;
    const distance_result d = flip_distance(inst.points, inst.m1, inst.m2, r, o.node_cap.value_or(default_node_cap()));
    std::cout << "states: " << d.states << '\n';
    if (!d.reachable) {
        std::cout << (d.depth_bound_hit ? "unreachable within depth " + std::to_string(*o.max_depth) : "unreachable")
                  << '\n';
        return exit_domain;
    }
    std::cout << "distance " << d.distance << '\n';
    write_moves(std::cout, d.witness.moves);
    return exit_ok;
}

int cmd_audit(const options& o) {
    const reduction_instance inst = load_instance(o.instance_path);
    const audit_report rep = audit(inst);
    for (const auto& r : rep.records)
        std::cout << (r.passed ? "pass " : "FAIL ") << r.check << " [" << r.gadget << "] expected " << r.expected
                  << ", observed " << r.observed << '\n';
    print_audit_summary(rep);
    return rep.passed() ? exit_ok : exit_domain;
}

int cmd_render(const options& o) {
    const reduction_instance inst = load_instance(o.instance_path);
    render_options ro;
    for (const std::string& l : o.layers) {
        const auto role = parse_role(l);
        if (!role) throw CLI::ValidationError("--layers", "unknown role '" + l + "'");
        ro.layers.insert(*role);
    }
    std::ofstream out(o.output_path, std::ios::binary);
    if (!out) throw io_error("cannot write " + o.output_path);
    out << render_svg(inst, ro);
    if (!out) throw io_error("write failed for " + o.output_path);
    return exit_ok;
}

int cmd_selftest() {
    const auto results = acceptance::run_all();
    std::cout << acceptance::format_report(results);
    for (const auto& r : results)
        if (!r.passed) return exit_domain;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane perfect matching flips and the planar vertex cover reduction"};
    app.require_subcommand(1);
    options o;

    auto* reduce_cmd = app.add_subcommand("reduce", "compile a graph file into an instance file");
    reduce_cmd->add_option("graph", o.graph_path, "graph file")->required();
    reduce_cmd->add_option("output", o.output_path, "instance file to write")->required();

    auto* witness_cmd = app.add_subcommand("witness", "emit and verify the witness flip sequence");
    witness_cmd->add_option("graph", o.graph_path, "graph file")->required();
    witness_cmd->add_option("instance", o.instance_path, "instance file from reduce")->required();
    witness_cmd->add_option("-o,--output", o.output_path, "write moves here instead of stdout");

    auto* flipdist_cmd = app.add_subcommand("flipdist", "exact flip distance from m1 to m2");
    flipdist_cmd->add_option("instance", o.instance_path, "instance file");
    flipdist_cmd->add_option("--max-depth", o.max_depth, "stop searching beyond this many flips");
    flipdist_cmd->add_option("--node-cap", o.node_cap, "maximum stored states (default MATCHFLIP_NODE_CAP or 10^7)");
    flipdist_cmd->add_option("--restrict", o.restrict_points, "only these point indices may change partners");
    flipdist_cmd->add_flag("--miniature", o.miniature,
                           "without an instance: depth-bounded search on an isolated miniature edge gadget");

    auto* audit_cmd = app.add_subcommand("audit", "run the instance-wide gadget audit");
    audit_cmd->add_option("instance", o.instance_path, "instance file")->required();

    auto* render_cmd = app.add_subcommand("render", "write an SVG drawing of an instance");
    render_cmd->add_option("instance", o.instance_path, "instance file")->required();
    render_cmd->add_option("output", o.output_path, "SVG file to write")->required();
    render_cmd->add_option("--layers", o.layers, "roles to draw (default all)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run every acceptance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_io;
    }
    try {
        if (*reduce_cmd) return cmd_reduce(o);
        if (*witness_cmd) return cmd_witness(o);
        if (*flipdist_cmd) return cmd_flipdist(o);
        if (*audit_cmd) return cmd_audit(o);
        if (*render_cmd) return cmd_render(o);
        if (*selftest_cmd) return cmd_selftest();
    } catch (const domain_failure& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_domain;
    } catch (const resource_exhausted& ex) {
        std::cerr << "resource limit: " << ex.what() << '\n';
        return exit_resource;
    } catch (const parse_error& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return exit_io;
    } catch (const io_error& ex) {
        std::cerr << "I/O error: " << ex.what() << '\n';
        return exit_io;
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return exit_io;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_domain;
    }
    return exit_io;
}
