#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "matchflip/flipgraph.h"
#include "matchflip/reduction.h"

namespace matchflip {

/// Malformed input text. The message starts with "line N: " when a line is to blame.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance text format, one item per line, `#` starts a comment line:
///   points N        then N lines `x y`
///   matching m1 H   then H lines `i j` with H = N/2
///   matching m2 H   likewise
///   k K
///   annotations     optional, then N lines `index role owner`
///   dropped-vertices D   optional, then D lines `v`
void write_instance(std::ostream& out, const reduction_instance& inst);

/// Checks indices, counts and that both matchings are perfect as index
/// pairings. Geometric validity is left to validate().
reduction_instance read_instance(std::istream& in);

struct graph_file {
    planar_graph_input graph;
    int cover_budget = 0;
    friend bool operator==(const graph_file&, const graph_file&) = default;
};

/// `graph n m`, then m lines `edge u v`, then `cover-budget c`.
void write_graph(std::ostream& out, const graph_file& g);
graph_file read_graph(std::istream& in);

/// One move per line: the two removed edges then the two added edges, as
/// eight point indices.
void write_moves(std::ostream& out, const std::vector<flip_move>& moves);
std::vector<flip_move> read_moves(std::istream& in);

reduction_instance load_instance(const std::string& path);
void save_instance(const std::string& path, const reduction_instance& inst);
graph_file load_graph(const std::string& path);
void save_graph(const std::string& path, const graph_file& g);

/// Raised for files that cannot be opened or written.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace matchflip
