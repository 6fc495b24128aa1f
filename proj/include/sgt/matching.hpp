#ifndef SGT_MATCHING_HPP
#define SGT_MATCHING_HPP

#include <optional>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

struct MatchingResult {
    int size = 0;
    std::vector<Edge> witness;  // sorted, lexicographically smallest optimum
};

// Maximum matching (pairwise vertex-disjoint edges).
MatchingResult matching_number(const Graph& g);

// Maximum induced matching: additionally no edge of g joins endpoints of
// two distinct members. Solved as maximum independent set on the
// edge-conflict graph.
MatchingResult induced_matching_number(const Graph& g);

bool is_matching(const Graph& g, const std::vector<Edge>& m);
bool is_induced_matching(const Graph& g, const std::vector<Edge>& m);

// Lowest-labeled vertex that lies on some cycle of g and is not an
// endpoint of any edge of the induced matching m; nullopt if none.
// Throws if m is not a valid induced matching of g.
std::optional<int> unsaturated_cycle_vertex(const Graph& g, const std::vector<Edge>& m);

}  // namespace sgt

#endif
