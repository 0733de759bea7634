#pragma once

#include <iosfwd>
#include <string>

#include "hfree/graph.hpp"

namespace hfree {

// Text format, 1-indexed, every line newline-terminated:
//   p edge <n> <m>
//   e <u> <v>        exactly m lines, 1 <= u < v <= n
// "c "-prefixed comment lines may appear anywhere.  Duplicate or reversed
// edge lines are parse errors.  write_graph emits edges sorted, no comments,
// and read_graph(write_graph(g)) == g.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

Graph graph_from_string(const std::string& text);
std::string graph_to_string(const Graph& g);

}  // namespace hfree
