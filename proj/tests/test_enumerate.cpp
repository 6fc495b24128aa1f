#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sgt/canonical.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/graph_io.hpp"

using namespace sgt;

namespace {

// brute force over all edge subsets, dedup by canonical form
int brute_force_connected_count(int n) {
    std::set<std::string> forms;
    int pairs = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        if (is_connected(g)) forms.insert(canonical_form(g));
    }
    return static_cast<int>(forms.size());
}

// rooted Ahu-style certificate: "(" + sorted child certificates + ")"
std::string ahu_cert(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != parent) kids.push_back(ahu_cert(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

// free-tree certificate: minimum rooted certificate over the 1-2 centroids
std::string tree_cert(const std::vector<std::vector<int>>& adj, int n) {
    // peel leaves to find the centers
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer, next;
    int remaining = n;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : adj[static_cast<size_t>(v)])
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer.swap(next);
    }
    std::string best;
    for (int c : layer) {
        std::string cert = ahu_cert(adj, c, -1);
        if (best.empty() || cert < best) best = cert;
    }
    return best;
}

// all labeled trees from Prufer sequences, dedup by tree certificate
// (an algorithm independent of the canonical-labeling engine)
int prufer_tree_count(int n) {
    if (n <= 2) return 1;
    std::set<std::string> forms;
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    while (true) {
        // linear-time Prufer decode with a pointer scan
        for (int v = 0; v < n; ++v) {
            deg[static_cast<size_t>(v)] = 1;
            adj[static_cast<size_t>(v)].clear();
        }
        for (int x : seq) ++deg[static_cast<size_t>(x)];
        deg[static_cast<size_t>(n - 1)] += n;  // n-1 is consumed only by the final edge
        auto add_edge = [&](int a, int b) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        };
        int ptr = 0;
        while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        for (int x : seq) {
            add_edge(leaf, x);
            if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                while (deg[static_cast<size_t>(++ptr)] != 1) {}
                leaf = ptr;
            }
        }
        add_edge(leaf, n - 1);
        forms.insert(tree_cert(adj, n));
        // next sequence
        int i = n - 3;
        while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<size_t>(i)];
    }
    return static_cast<int>(forms.size());
}

}  // namespace

TEST_CASE("connected graph counts against the brute-force oracle") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(enumerate_connected_graphs(n).size()) == expected[n]);
        CHECK(brute_force_connected_count(n) == expected[n]);
    }
    CHECK(enumerate_connected_graphs(7).size() == 853);
    CHECK(enumerate_connected_graphs(8).size() == 11117);
    CHECK_THROWS(enumerate_connected_graphs(0));
    CHECK_THROWS(enumerate_connected_graphs(11));
}

TEST_CASE("enumerated graphs are connected, distinct and round-trip graph6") {
    std::set<std::string> forms;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            CHECK(is_connected(g));
            CHECK(forms.insert(canonical_form(g)).second);
            CHECK(parse_graph6(emit_graph6(g)) == g);
        }
}

TEST_CASE("tree counts against the Prufer oracle") {
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        CHECK(static_cast<int>(enumerate_trees(n).size()) == expected[n]);
        CHECK(prufer_tree_count(n) == expected[n]);
    }
    CHECK(enumerate_trees(10).size() == 106);
    CHECK(enumerate_trees(12).size() == 551);
    CHECK_THROWS(enumerate_trees(15));
    for (const Graph& t : enumerate_trees(9)) CHECK(is_tree(t));
}
