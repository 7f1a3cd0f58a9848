#pragma once

#include <string>
#include <string_view>

#include "graphent/graph.hpp"

namespace graphent {

/// Parses "u v" lines (0-based). An optional "n <count>" line declares the
/// order so trailing isolated vertices can be represented. Blank lines and
/// lines starting with '#' are ignored. An empty document is the one-vertex
/// graph.
Graph parse_edge_list(std::string_view text);

/// Same grammar as parse_edge_list; "u v" is the arc u -> v.
OrientedGraph parse_arc_list(std::string_view text);

/// graph6 decoding for orders 1..62. A single trailing newline is tolerated.
Graph parse_graph6(std::string_view bytes);
std::string encode_graph6(const Graph& g);

std::string to_edge_list(const Graph& g);
std::string to_arc_list(const OrientedGraph& g);

}  // namespace graphent
