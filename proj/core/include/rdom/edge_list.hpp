#ifndef RDOM_EDGE_LIST_HPP
#define RDOM_EDGE_LIST_HPP

#include <string>

#include "rdom/graph.hpp"

namespace rdom {

// Plain-text edge-list format:
//
//   line 1:        "<n> <m>"
//   next m lines:  "<u> <v>"      with 0 <= u,v < n and u != v
//
// Tokens are separated by a single space; lines starting with '#' are
// ignored; the trailing newline is optional. The format is strict on
// purpose — duplicate edges, padding whitespace, or an edge count that does
// not match the header are rejected so generator bugs surface immediately.
// Parse failures throw ParseError carrying the 1-based physical line number.
Graph from_edge_list(const std::string& text);

// Canonical serialization: header line, then edges as "u v" with u < v in
// lexicographic order, one per line, trailing newline included. Feeding the
// result back through from_edge_list reproduces an equal graph.
std::string to_edge_list(const Graph& g);

}  // namespace rdom

#endif  // RDOM_EDGE_LIST_HPP
