#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fibcube/factorization.hpp"
#include "fibcube/graph.hpp"
#include "fibcube/relations.hpp"

namespace fibcube {

// Canonical cube form, byte-stable:
//   # fibcube family=<O|I> p=<p> r=<r> n=<n>
//   <|V|> <|E|>
//   one label line per vertex in lexicographic order
//   one line "u v" per edge, u < v, ascending by (u, v)
// The graph must carry labels. LF line endings, ASCII.
std::string write_edge_list(const Graph& g, const CubeParams& params);

// Headerless form for graphs without cube parameters: the count line, label
// lines when the graph is labeled, then the edge lines.
std::string write_edge_list(const Graph& g);

struct LoadedGraph {
    Graph graph;
    std::optional<CubeParams> params;
};

// reads either form; label lines are detected by the absence of a space
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list_file(const std::string& path);

// layout-free DOT; node names are word labels when present
std::string write_dot(const Graph& g);

// "factors=<k>", each factor in the headerless edge-list form, then one
// line "<vertex> <x_0> .. <x_{k-1}>" per vertex
std::string write_factorization(const Factorization& f);

std::string report_line(const ThetaViolation& v);
std::string report_line(const ColorThetaViolation& v);

}  // namespace fibcube
