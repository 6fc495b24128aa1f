#ifndef SGT_CANONICAL_HPP
#define SGT_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

// Canonically relabeled adjacency rows: equal for two graphs iff they are
// isomorphic. Computed by iterated neighborhood refinement plus a
// backtracking search over the residual candidate orderings.
std::vector<std::uint64_t> canonical_adjacency(const Graph& g);

// Byte-string certificate (order byte followed by packed upper triangle).
std::string canonical_form(const Graph& g);

// Packed certificate for n <= 11: order in the top byte, upper-triangle
// bits below. Handy as a dedup key during enumeration.
std::uint64_t canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace sgt

#endif
