#ifndef SGT_ENUMERATE_HPP
#define SGT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

// One representative per isomorphism class of connected graphs on n
// vertices (1 <= n <= 10), in a deterministic order.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_connected_graphs(int n);

// One representative per isomorphism class of trees on n vertices
// (1 <= n <= 14), deterministic order.
void for_each_tree(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_trees(int n);

}  // namespace sgt

#endif
