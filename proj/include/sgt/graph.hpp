#ifndef SGT_GRAPH_HPP
#define SGT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices; adjacency rows are
/// single machine-word bitsets. Immutable after construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    static Graph empty(int n);
    // Duplicate edges collapse; loops and out-of-range vertices are rejected.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;
    std::uint64_t neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }
    bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1u; }
    int degree(int u) const;
    std::uint64_t vertex_mask() const;
    std::vector<Edge> edges() const;  // sorted, u < v

    bool operator==(const Graph&) const = default;

    void check_invariants() const;  // throws if the representation is broken

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

int popcount64(std::uint64_t x);

/// Induced subgraph relabeled 0..k-1 in original vertex order, plus the map
/// from new labels back to parent labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t keep);
InducedSubgraph delete_vertices(const Graph& g, std::uint64_t drop);

/// Connected components, nontrivial (order >= 2) parts in order of minimum
/// original vertex label, isolated vertices collected as a mask.
struct ComponentSplit {
    std::vector<InducedSubgraph> nontrivial;
    std::uint64_t isolated = 0;
    int component_count() const;
};

ComponentSplit connected_components(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

int cyclomatic_number(const Graph& g);
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);
// Throws on disconnected input; 0 for a single vertex.
int diameter(const Graph& g);

// Disjoint union of g and h plus the bridge {u in g, v in h}; h's vertices
// are relabeled g.order()..g.order()+h.order()-1.
Graph join_bridge(const Graph& g, int u, const Graph& h, int v);
Graph disjoint_union(const Graph& g, const Graph& h);

// Vertices lying on some cycle (incident to a non-bridge edge).
std::uint64_t cycle_vertices(const Graph& g);

}  // namespace sgt

#endif
