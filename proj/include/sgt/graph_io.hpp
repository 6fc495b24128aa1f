#ifndef SGT_GRAPH_IO_HPP
#define SGT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "sgt/graph.hpp"

namespace sgt {

// graph6 short form (n <= 62): header byte n+63, then the upper triangle in
// column-major order, 6 bits per byte offset by 63, zero-padded.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment; whitespace-separated.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace sgt

#endif
