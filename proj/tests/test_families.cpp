#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sgt/canonical.hpp"
#include "sgt/families.hpp"
#include "sgt/matching.hpp"
#include "sgt/spectral.hpp"

using namespace sgt;

TEST_CASE("constructors") {
    CHECK(path(1).order() == 1);
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS(cycle(2));
    CHECK(star(5).degree(0) == 4);
    CHECK(is_isomorphic(c3aaa(0), cycle(3)));
    Graph c2 = c3aaa(2);
    CHECK(c2.order() == 9);
    CHECK(c2.edge_count() == 9);
    CHECK(cyclomatic_number(c2) == 1);
    CHECK(diameter(c2) == 3);
    Graph y = y6();
    CHECK(y.order() == 6);
    CHECK(y.degree(0) == 3);
    CHECK(y.degree(1) == 3);
    CHECK(diameter(y) == 3);
    CHECK(is_isomorphic(caterpillar({0, 0, 0}), path(3)));
    CHECK(is_isomorphic(caterpillar({4}), star(5)));
    CHECK_THROWS(caterpillar({}));
}

TEST_CASE("fig2 reproduces the published quantities") {
    Graph g = fig2_graph();
    CHECK(g.order() == 51);
    CHECK(g.edge_count() == 52);
    CHECK(g.degree(0) == 12);
    CHECK(cyclomatic_number(g) == 2);
    auto split = delete_vertices(g, 1ull << 0);
    auto comps = connected_components(split.graph);
    CHECK(comps.nontrivial.size() == 7);
    CHECK(popcount64(comps.isolated) == 5);
    CHECK(multiplicity_rational(g, Rat(-2)) == 8);
    CHECK(multiplicity(g, AlgNum::integer(-2)) == 8);
    CHECK(induced_matching_number(g).size == 7);
}

TEST_CASE("recognizers") {
    for (int a = 0; a <= 10; ++a) {
        auto r = is_c3aaa(c3aaa(a));
        REQUIRE(r.has_value());
        CHECK(*r == a);
    }
    // unequal pendant counts: not C3(a,a,a)
    Graph uneven = Graph::from_edge_list(
        8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}});
    CHECK(!is_c3aaa(uneven).has_value());
    CHECK(!is_c3aaa(path(3)).has_value());

    CHECK(is_c5(cycle(5)));
    CHECK(!is_c5(path(5)));
    CHECK(!is_c5(cycle(6)));

    CHECK(is_tree_diam_le3(path(4)));
    CHECK(!is_tree_diam_le3(path(5)));
    CHECK(is_tree_diam_le3(star(7)));
    CHECK(is_tree_diam_le3(y6()));

    CHECK(is_star(star(6)));
    CHECK(is_star(path(2)));
    CHECK(is_star(path(1)));
    CHECK(!is_star(path(4)));
}

TEST_CASE("caterpillar recognizer") {
    auto p = is_caterpillar(path(6));
    REQUIRE(p.has_value());
    CHECK(p->size() == 4);  // inner vertices 1..4
    CHECK(is_caterpillar(path(1)).has_value());
    CHECK(is_caterpillar(star(5)).has_value());
    CHECK(is_caterpillar(y6()).has_value());
    // spider with three legs of length 2 is not a caterpillar
    Graph spider = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(!is_caterpillar(spider).has_value());
    CHECK_THROWS(is_caterpillar(cycle(4)));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        std::vector<int> hairs(static_cast<size_t>(k));
        int total = k;
        for (auto& h : hairs) {
            h = static_cast<int>(rng() % 4);
            total += h;
        }
        if (total > 20) continue;
        CHECK(is_caterpillar(caterpillar(hairs)).has_value());
    }
}

TEST_CASE("thm31 equality classifier") {
    CHECK(classify_thm31_equality(cycle(5)).tag == Classification::Tag::C5);
    CHECK(classify_thm31_equality(c3aaa(3)).tag == Classification::Tag::C3aaa);
    CHECK(classify_thm31_equality(c3aaa(3)).a == 3);
    // double star = diameter-3 tree
    CHECK(classify_thm31_equality(y6()).tag == Classification::Tag::TreeDiamAtMost3);
    CHECK(classify_thm31_equality(path(5)).tag == Classification::Tag::NotExtremal);
    CHECK(classify_thm31_equality(cycle(4)).tag == Classification::Tag::NotExtremal);
}

TEST_CASE("thm12 classifier") {
    // P5 with lambda = 1: caterpillar of diameter 4
    auto c = classify_thm12(path(5), AlgNum::integer(1));
    CHECK(c.tag == Classification::Tag::Caterpillar456);
    CHECK(c.diameter == 4);

    CHECK(classify_thm12(star(5), AlgNum::integer(2)).tag == Classification::Tag::NotExtremal);

    // w joined to the centers of three K_{1,2}, lambda = sqrt(2)
    Graph t = Graph::from_edge_list(1, {});
    for (int i = 0; i < 3; ++i) t = join_bridge(t, 0, star(3), 0);
    auto b = classify_thm12(t, AlgNum::sqrt_of(2));
    CHECK(b.tag == Classification::Tag::Thm12FormB);
    CHECK(b.s == 3);
    // the tree indeed satisfies m_lambda = beta' - 1
    CHECK(multiplicity(t, AlgNum::sqrt_of(2)) == induced_matching_number(t).size - 1);

    CHECK_THROWS(classify_thm12(cycle(5), AlgNum::integer(1)));
    CHECK_THROWS(classify_thm12(path(5), AlgNum::integer(0)));

    // diameter-6 caterpillar with center degree 2 qualifies; degree > 2 does not
    auto ok = classify_thm12(path(7), AlgNum::integer(1));
    CHECK(ok.tag == Classification::Tag::Caterpillar456);
    CHECK(ok.diameter == 6);
    Graph bad = caterpillar({0, 0, 0, 1, 0, 0, 0});  // diameter 6, backbone center degree 3
    auto r = classify_thm12(bad, AlgNum::integer(1));
    CHECK(r.tag != Classification::Tag::Caterpillar456);
}

TEST_CASE("thm32 classifier") {
    auto f = classify_thm32(fig2_graph(), AlgNum::integer(-2));
    CHECK(f.tag == Classification::Tag::Thm32Form);
    CHECK(f.s == 7);
    REQUIRE(f.cyclic_part_a.size() == 2);
    CHECK(f.cyclic_part_a[0] == 2);
    CHECK(f.cyclic_part_a[1] == 2);
    CHECK(popcount64(f.isolated) == 5);

    CHECK_THROWS(classify_thm32(cycle(5), AlgNum::integer(2)));  // beta' = 1
    AlgNum golden = AlgNum::root_of(IntPoly{-1, 1, 1}, Rat(0), Rat(1));
    CHECK(classify_thm32(path(9), golden).tag == Classification::Tag::NotExtremal);
}

TEST_CASE("thm33 classifier") {
    // w joined to the centers of four K_{1,2}, lambda = sqrt(2)
    Graph g = Graph::from_edge_list(1, {});
    for (int i = 0; i < 4; ++i) g = join_bridge(g, 0, star(3), 0);
    auto c = classify_thm33(g, AlgNum::sqrt_of(2));
    CHECK(c.tag == Classification::Tag::Thm33Form);
    CHECK(c.t == 2);
    CHECK(c.s == 4);
    // and m_lambda = beta + c - 1 holds
    CHECK(multiplicity(g, AlgNum::sqrt_of(2)) ==
          matching_number(g).size + cyclomatic_number(g) - 1);

    // lambda = 1 + sqrt(2) roots x^2 - 2x - 1; lambda^2 irrational
    AlgNum ir = AlgNum::root_of(IntPoly{-1, -2, 1}, Rat(2), Rat(3));
    CHECK(classify_thm33(g, ir).tag == Classification::Tag::NotExtremal);

    CHECK_THROWS(classify_thm33(cycle(5), AlgNum::integer(2)));
    CHECK_THROWS(classify_thm33(g, AlgNum::integer(0)));
}
