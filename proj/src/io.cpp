#include "matchflip/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace matchflip {

namespace {

// Splits the input into non-empty, non-comment lines of tokens, keeping line numbers.
class line_reader {
public:
    explicit line_reader(std::istream& in) : in_(in) { advance(); }

    bool done() const { return done_; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("line " + std::to_string(line_) + ": " + what);
    }

    void expect_count(std::size_t n) const {
        if (tokens_.size() != n)
            fail("expected " + std::to_string(n) + " fields, found " + std::to_string(tokens_.size()));
    }

    template <class T>
    T number(std::size_t i) const {
        const std::string& s = tokens_.at(i);
        T value{};
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("not an integer: '" + s + "'");
        return value;
    }

    void advance() {
        std::string text;
        while (std::getline(in_, text)) {
            ++line_;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            const auto first = text.find_first_not_of(" \t");
            if (first == std::string::npos || text[first] == '#') continue;
            tokens_.clear();
            std::istringstream ss(text);
            for (std::string tok; ss >> tok;) tokens_.push_back(tok);
            return;
        }
        done_ = true;
        tokens_.clear();
    }

private:
    std::istream& in_;
    std::vector<std::string> tokens_;
    int line_ = 0;
    bool done_ = false;
};

void expect_keyword(line_reader& r, const std::string& keyword) {
    if (r.done()) throw parse_error("unexpected end of input, expected '" + keyword + "'");
    if (r.tokens().front() != keyword) r.fail("expected '" + keyword + "', found '" + r.tokens().front() + "'");
}

plane_matching read_matching(line_reader& r, const std::string& name, std::size_t n) {
    expect_keyword(r, "matching");
    r.expect_count(3);
    if (r.tokens()[1] != name) r.fail("expected matching " + name);
    const auto count = r.number<std::size_t>(2);
    if (2 * count != n) r.fail("matching " + name + " must have " + std::to_string(n / 2) + " edges");
    std::vector<char> used(n, 0);
    std::vector<edge> edges;
    for (std::size_t i = 0; i < count; ++i) {
        r.advance();
        if (r.done()) throw parse_error("unexpected end of input in matching " + name);
        r.expect_count(2);
        const int a = r.number<int>(0), b = r.number<int>(1);
        if (a < 0 || b < 0 || std::size_t(a) >= n || std::size_t(b) >= n) r.fail("point index out of range");
        if (a == b || used[a] || used[b]) r.fail("matching " + name + " uses a point twice");
        used[a] = used[b] = 1;
        edges.push_back(make_edge(a, b));
    }
    r.advance();
    return make_matching(std::move(edges));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    return in;
}

}  // namespace

void write_instance(std::ostream& out, const reduction_instance& inst) {
    out << "points " << inst.points.size() << '\n';
    for (const point& p : inst.points) out << p.x << ' ' << p.y << '\n';
    for (const auto& [name, m] : {std::pair{"m1", &inst.m1}, std::pair{"m2", &inst.m2}}) {
        out << "matching " << name << ' ' << m->edges.size() << '\n';
        for (const edge& e : m->edges) out << e.u << ' ' << e.v << '\n';
    }
    out << "k " << inst.k << '\n';
    if (!inst.annotations.empty()) {
        out << "annotations\n";
        for (std::size_t i = 0; i < inst.annotations.size(); ++i)
            out << i << ' ' << role_name(inst.annotations[i].role) << ' ' << owner_name(inst.annotations[i].owner) << '\n';
    }
    if (!inst.dropped_vertices.empty()) {
        out << "dropped-vertices " << inst.dropped_vertices.size() << '\n';
        for (int v : inst.dropped_vertices) out << v << '\n';
    }
}

reduction_instance read_instance(std::istream& in) {
    line_reader r(in);
    reduction_instance inst;
    expect_keyword(r, "points");
    r.expect_count(2);
    const auto n = r.number<std::size_t>(1);
    if (n % 2 != 0) r.fail("odd number of points has no perfect matching");
    for (std::size_t i = 0; i < n; ++i) {
        r.advance();
        if (r.done()) throw parse_error("unexpected end of input in points");
        r.expect_count(2);
        const point p{r.number<coord>(0), r.number<coord>(1)};
        if (!coordinate_in_range(p)) r.fail("coordinate out of range");
        inst.points.push_back(p);
    }
    r.advance();
    inst.m1 = read_matching(r, "m1", n);
    inst.m2 = read_matching(r, "m2", n);
    expect_keyword(r, "k");
    r.expect_count(2);
    inst.k = r.number<int>(1);
    if (inst.k < 0) r.fail("negative k");
    r.advance();
    if (!r.done() && r.tokens().front() == "annotations") {
        r.expect_count(1);
        inst.annotations.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            r.advance();
            if (r.done()) throw parse_error("unexpected end of input in annotations");
            r.expect_count(3);
            if (r.number<std::size_t>(0) != i) r.fail("annotations must list points in order");
            const auto role = parse_role(r.tokens()[1]);
            const auto owner = parse_owner(r.tokens()[2]);
            if (!role) r.fail("unknown role '" + r.tokens()[1] + "'");
            if (!owner) r.fail("malformed owner '" + r.tokens()[2] + "'");
            inst.annotations[i] = annotation{*role, *owner};
        }
        r.advance();
    }
    if (!r.done() && r.tokens().front() == "dropped-vertices") {
        r.expect_count(2);
        const auto count = r.number<std::size_t>(1);
        for (std::size_t i = 0; i < count; ++i) {
            r.advance();
            if (r.done()) throw parse_error("unexpected end of input in dropped-vertices");
            r.expect_count(1);
            inst.dropped_vertices.push_back(r.number<int>(0));
        }
        r.advance();
    }
    if (!r.done()) r.fail("unexpected content '" + r.tokens().front() + "'");
    return inst;
}

void write_graph(std::ostream& out, const graph_file& g) {
    out << "graph " << g.graph.n << ' ' << g.graph.edges.size() << '\n';
    for (const edge& e : g.graph.edges) out << "edge " << e.u << ' ' << e.v << '\n';
    out << "cover-budget " << g.cover_budget << '\n';
}

graph_file read_graph(std::istream& in) {
    line_reader r(in);
    graph_file g;
    expect_keyword(r, "graph");
    r.expect_count(3);
    g.graph.n = r.number<int>(1);
    const auto m = r.number<std::size_t>(2);
    if (g.graph.n < 0) r.fail("negative vertex count");
    for (std::size_t i = 0; i < m; ++i) {
        r.advance();
        expect_keyword(r, "edge");
        r.expect_count(3);
        g.graph.edges.push_back(edge{r.number<int>(1), r.number<int>(2)});
    }
    r.advance();
    expect_keyword(r, "cover-budget");
    r.expect_count(2);
    g.cover_budget = r.number<int>(1);
    r.advance();
    if (!r.done()) r.fail("unexpected content '" + r.tokens().front() + "'");
    try {
        check_graph_input(g.graph);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("invalid graph: ") + ex.what());
    }
    if (g.cover_budget < 0) throw parse_error("negative cover budget");
    return g;
}

void write_moves(std::ostream& out, const std::vector<flip_move>& moves) {
    for (const flip_move& f : moves)
        out << f.removed[0].u << ' ' << f.removed[0].v << ' ' << f.removed[1].u << ' ' << f.removed[1].v << ' '
            << f.added[0].u << ' ' << f.added[0].v << ' ' << f.added[1].u << ' ' << f.added[1].v << '\n';
}

std::vector<flip_move> read_moves(std::istream& in) {
    line_reader r(in);
    std::vector<flip_move> moves;
    for (; !r.done(); r.advance()) {
        r.expect_count(8);
        flip_move f;
        f.removed[0] = make_edge(r.number<int>(0), r.number<int>(1));
        f.removed[1] = make_edge(r.number<int>(2), r.number<int>(3));
        f.added[0] = make_edge(r.number<int>(4), r.number<int>(5));
        f.added[1] = make_edge(r.number<int>(6), r.number<int>(7));
        moves.push_back(f);
    }
    return moves;
}

reduction_instance load_instance(const std::string& path) {
    auto in = open_in(path);
    return read_instance(in);
}

void save_instance(const std::string& path, const reduction_instance& inst) {
    auto out = open_out(path);
    write_instance(out, inst);
    if (!out) throw io_error("write failed for " + path);
}

graph_file load_graph(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void save_graph(const std::string& path, const graph_file& g) {
    auto out = open_out(path);
    write_graph(out, g);
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace matchflip
