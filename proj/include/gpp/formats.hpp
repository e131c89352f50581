#pragma once

#include <string>

#include "gpp/graph.hpp"

namespace gpp {

// Short-form graph6 (n <= 62): length byte n+63, then the upper triangle in
// column order x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit
// chunks, each biased by 63. Malformed input reports the byte offset.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// Plain edge list: header "n <count>", then one "u v" per line; '#' starts a
// comment; duplicate edges collapse. Errors carry the 1-based line number.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

}  // namespace gpp
