#include "sgt/graph.hpp"

#include <bit>
#include <queue>
#include <stdexcept>

namespace sgt {

int popcount64(std::uint64_t x) { return std::popcount(x); }

Graph Graph::empty(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: order out of range");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), 0);
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: loop edge rejected");
        g.adj_[static_cast<size_t>(u)] |= 1ull << v;
        g.adj_[static_cast<size_t>(v)] |= 1ull << u;
    }
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += popcount64(row);
    return total / 2;
}

int Graph::degree(int u) const { return popcount64(adj_[static_cast<size_t>(u)]); }

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::check_invariants() const {
    for (int u = 0; u < n_; ++u) {
        if (adj_[static_cast<size_t>(u)] >> n_)
            throw std::logic_error("Graph: adjacency bit beyond order");
        if (has_edge(u, u)) throw std::logic_error("Graph: loop");
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v) != has_edge(v, u)) throw std::logic_error("Graph: asymmetric");
    }
}

InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t keep) {
    keep &= g.vertex_mask();
    std::vector<int> to_parent;
    std::vector<int> new_label(static_cast<size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) {
            new_label[static_cast<size_t>(v)] = static_cast<int>(to_parent.size());
            to_parent.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (new_label[static_cast<size_t>(u)] >= 0 && new_label[static_cast<size_t>(v)] >= 0)
            edges.emplace_back(new_label[static_cast<size_t>(u)], new_label[static_cast<size_t>(v)]);
    return {Graph::from_edge_list(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

InducedSubgraph delete_vertices(const Graph& g, std::uint64_t drop) {
    return induced_subgraph(g, g.vertex_mask() & ~drop);
}

int ComponentSplit::component_count() const {
    return static_cast<int>(nontrivial.size()) + popcount64(isolated);
}

namespace {
std::uint64_t reach(const Graph& g, int src) {
    std::uint64_t seen = 1ull << src, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}
}  // namespace

ComponentSplit connected_components(const Graph& g) {
    ComponentSplit out;
    std::uint64_t remaining = g.vertex_mask();
    while (remaining) {
        int v = std::countr_zero(remaining);
        std::uint64_t comp = reach(g, v);
        remaining &= ~comp;
        if (popcount64(comp) >= 2)
            out.nontrivial.push_back(induced_subgraph(g, comp));
        else
            out.isolated |= comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return reach(g, 0) == g.vertex_mask();
}

int component_count(const Graph& g) {
    int count = 0;
    std::uint64_t remaining = g.vertex_mask();
    while (remaining) {
        int v = std::countr_zero(remaining);
        remaining &= ~reach(g, v);
        ++count;
    }
    return count;
}

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.order() + component_count(g);
}

bool is_forest(const Graph& g) { return cyclomatic_number(g) == 0; }

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && is_forest(g); }

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    dist[static_cast<size_t>(src)] = 0;
    std::uint64_t seen = 1ull << src, frontier = seen;
    int d = 0;
    while (frontier) {
        ++d;
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= frontier;
        std::uint64_t nf = frontier;
        while (nf) {
            int v = std::countr_zero(nf);
            nf &= nf - 1;
            dist[static_cast<size_t>(v)] = d;
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("diameter: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("diameter: disconnected graph");
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        for (int d : bfs_distances(g, v))
            if (d > best) best = d;
    return best;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edge_list(g.order() + h.order(), edges);
}

Graph join_bridge(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw std::invalid_argument("join_bridge: vertex out of range");
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.emplace_back(a + g.order(), b + g.order());
    edges.emplace_back(u, v + g.order());
    return Graph::from_edge_list(g.order() + h.order(), edges);
}

namespace {
// Tarjan bridge-finding, iterative.
void find_bridges(const Graph& g, std::vector<Edge>& bridges) {
    int n = g.order();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        std::vector<std::pair<int, std::uint64_t>> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.emplace_back(root, g.neighbors(root));
        while (!stack.empty()) {
            auto& [v, rest] = stack.back();
            if (rest) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (disc[static_cast<size_t>(w)] == -1) {
                    parent[static_cast<size_t>(w)] = v;
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.emplace_back(w, g.neighbors(w));
                } else if (w != parent[static_cast<size_t>(v)]) {
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                int p = parent[static_cast<size_t>(v)];
                if (p != -1) {
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)])
                        bridges.emplace_back(std::min(p, v), std::max(p, v));
                }
                stack.pop_back();
            }
        }
    }
}
}  // namespace

std::uint64_t cycle_vertices(const Graph& g) {
    std::vector<Edge> bridges;
    find_bridges(g, bridges);
    // an edge lies on a cycle iff it is not a bridge
    std::vector<std::uint64_t> bridge_adj(static_cast<size_t>(g.order()), 0);
    for (auto [u, v] : bridges) {
        bridge_adj[static_cast<size_t>(u)] |= 1ull << v;
        bridge_adj[static_cast<size_t>(v)] |= 1ull << u;
    }
    std::uint64_t on_cycle = 0;
    for (int u = 0; u < g.order(); ++u)
        if (g.neighbors(u) & ~bridge_adj[static_cast<size_t>(u)]) on_cycle |= 1ull << u;
    return on_cycle;
}

}  // namespace sgt
