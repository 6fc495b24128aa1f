#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "sgt/canonical.hpp"
#include "sgt/graph.hpp"
#include "sgt/graph_io.hpp"

using namespace sgt;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(n, e);
}

Graph permute(const Graph& g, const std::vector<int>& pi) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(pi[static_cast<size_t>(u)], pi[static_cast<size_t>(v)]);
    return Graph::from_edge_list(g.order(), e);
}

}  // namespace

TEST_CASE("construction and invariants") {
    Graph c3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(c3.edge_count() == 3);
    c3.check_invariants();
    CHECK(Graph::empty(2).edge_count() == 0);
    Graph c5 = cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS(Graph::from_edge_list(3, {{0, 0}}));
    CHECK_THROWS(Graph::from_edge_list(3, {{0, 5}}));
    // duplicate edges collapse
    CHECK(Graph::from_edge_list(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("components and cyclomatic number") {
    auto split = connected_components(cycle(5));
    CHECK(split.nontrivial.size() == 1);
    CHECK(split.isolated == 0);
    CHECK(split.component_count() == 1);

    auto empty2 = connected_components(Graph::empty(2));
    CHECK(empty2.nontrivial.empty());
    CHECK(popcount64(empty2.isolated) == 2);

    // C3 + K_{1,2} + isolated vertex, n = 7
    Graph u = disjoint_union(disjoint_union(cycle(3), star(3)), Graph::empty(1));
    auto s = connected_components(u);
    CHECK(s.nontrivial.size() == 2);
    CHECK(popcount64(s.isolated) == 1);
    CHECK(s.component_count() == 3);

    CHECK(cyclomatic_number(path(9)) == 0);
    CHECK(cyclomatic_number(cycle(5)) == 1);
    CHECK(is_tree(path(9)));
    CHECK(!is_tree(cycle(4)));
    CHECK(is_forest(disjoint_union(path(3), path(4))));
}

TEST_CASE("diameter") {
    CHECK(diameter(star(5)) == 2);
    CHECK(diameter(path(7)) == 6);
    CHECK(diameter(Graph::from_edge_list(1, {})) == 0);
    CHECK_THROWS(diameter(Graph::empty(2)));
    CHECK_THROWS(diameter(Graph::empty(0)));
}

TEST_CASE("vertex deletion") {
    auto p4 = delete_vertices(cycle(5), 1ull << 0);
    CHECK(p4.graph.order() == 4);
    CHECK(p4.graph.edge_count() == 3);
    CHECK(is_tree(p4.graph));
    CHECK(p4.to_parent == std::vector<int>{1, 2, 3, 4});

    auto leaves = delete_vertices(star(5), 1ull << 0);
    CHECK(leaves.graph.edge_count() == 0);
    CHECK(leaves.graph.order() == 4);
}

TEST_CASE("join_bridge and cycle vertices") {
    Graph p4 = join_bridge(path(2), 0, path(2), 0);
    CHECK(is_isomorphic(p4, path(4)));
    Graph g = join_bridge(cycle(3), 0, path(2), 0);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(cyclomatic_number(g) == 1);
    CHECK(popcount64(cycle_vertices(g)) == 3);
    CHECK(cycle_vertices(path(6)) == 0);
    CHECK(popcount64(cycle_vertices(cycle(5))) == 5);
}

TEST_CASE("graph6 round trip") {
    Graph d = parse_graph6("D?{");
    CHECK(d.order() == 5);
    CHECK(emit_graph6(d) == "D?{");
    CHECK(emit_graph6(cycle(3)) == "Bw");
    Graph a = parse_graph6("A?");
    CHECK(a.order() == 2);
    CHECK(a.edge_count() == 0);
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("B"));       // truncated payload
    CHECK_THROWS(parse_graph6("~??"));     // long form
    CHECK_THROWS(parse_graph6("B\x1f?"));  // byte out of range
    for (int n = 1; n <= 8; ++n) {
        Graph g = cycle(std::max(n, 3));
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("edge list text") {
    Graph g = parse_edge_list_text("3 2  # a triangle minus an edge\n0 1\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    Graph rt = parse_edge_list_text(emit_edge_list(g));
    CHECK(rt == g);
    CHECK_THROWS(parse_edge_list_text("3 2\n0 1\n"));  // token count mismatch
    CHECK_THROWS(parse_edge_list_text(""));
}

TEST_CASE("canonical form distinguishes and identifies") {
    CHECK(is_isomorphic(cycle(5), permute(cycle(5), {2, 0, 4, 1, 3})));
    CHECK(!is_isomorphic(path(4), star(4)));
    CHECK(canonical_form(path(4)) != canonical_form(star(4)));
    CHECK(canonical_form(cycle(6)) == canonical_form(permute(cycle(6), {5, 3, 1, 0, 2, 4})));
    // non-isomorphic pair with equal degree sequences: C6 vs 2*C3
    CHECK(!is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST_CASE("canonical form is permutation invariant on random graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        std::vector<int> pi(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pi[static_cast<size_t>(i)] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        CHECK(canonical_form(g) == canonical_form(permute(g, pi)));
    }
}

TEST_CASE("21 connected graphs on 5 vertices by brute force") {
    std::set<std::string> forms;
    for (int mask = 0; mask < 1 << 10; ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(5, e);
        if (is_connected(g)) forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == 21);
}

TEST_CASE("canonical key agrees with canonical form on small graphs") {
    std::set<std::uint64_t> keys;
    std::set<std::string> forms;
    for (int mask = 0; mask < 1 << 6; ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(4, e);
        keys.insert(canonical_key(g));
        forms.insert(canonical_form(g));
    }
    CHECK(keys.size() == forms.size());
    CHECK(keys.size() == 11);  // all graphs on 4 vertices
}
