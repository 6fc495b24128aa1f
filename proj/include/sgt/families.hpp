#ifndef SGT_FAMILIES_HPP
#define SGT_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/algnum.hpp"
#include "sgt/graph.hpp"

namespace sgt {

// Named constructors with deterministic labeling.
Graph path(int n);
Graph cycle(int n);   // n >= 3
Graph star(int n);    // K_{1,n-1}; vertex 0 is the center
// Backbone path 0..k-1, then hairs[i] pendants per backbone vertex,
// appended left to right.
Graph caterpillar(const std::vector<int>& hairs);
// Triangle 0,1,2 with a pendants on each cycle vertex (pendant blocks in
// cycle-vertex order).
Graph c3aaa(int a);
// The 6-vertex tree with two adjacent degree-3 vertices (vertices 0,1).
Graph y6();
// The 51-vertex example: hub w = 0 joined to the centers of three K_{1,4},
// one degree-3 vertex of each of two Y6, one cycle vertex of each of two
// C3(2,2,2), plus 5 pendant vertices at w.
Graph fig2_graph();

// Structural recognizers (shape analysis, no catalog isomorphism).
std::optional<int> is_c3aaa(const Graph& g);  // the hair count a, if any
bool is_c5(const Graph& g);
bool is_star(const Graph& g);                 // K_{1,m} for some m >= 0
bool is_tree_diam_le3(const Graph& g);
// Backbone of a caterpillar in path order (empty for K1/K2); nullopt if
// the input is not a caterpillar. Requires a tree.
std::optional<std::vector<int>> is_caterpillar(const Graph& g);

struct Classification {
    enum class Tag {
        C3aaa,
        C5,
        TreeDiamAtMost3,
        Caterpillar456,
        Thm12FormB,
        Thm32Form,
        Thm33Form,
        NotExtremal,
    };
    Tag tag = Tag::NotExtremal;
    int a = -1;                        // C3aaa hair count
    int diameter = -1;                 // Caterpillar456
    std::vector<int> backbone;         // Caterpillar456
    int w = -1;                        // hub vertex for the decomposition forms
    int s = -1;                        // number of nontrivial components of G - w
    int t = -1;                        // Thm33Form star size
    std::vector<int> cyclic_part_a;    // Thm32Form: a-values of the C3(a,a,a) parts
    std::uint64_t isolated = 0;        // isolated vertices of G - w

    bool extremal() const { return tag != Tag::NotExtremal; }
    std::string tag_name() const;
};

// Equality case of the multiplicity bound for connected graphs:
// C3(a,a,a), C5, or a tree of diameter <= 3.
Classification classify_thm31_equality(const Graph& g);

// Trees with m_lambda = beta' - 1: caterpillar of diameter 4..6 (center
// degree 2 when the diameter is 6), or the hub decomposition form.
// Requires a tree and a nonzero eigenvalue lambda.
Classification classify_thm12(const Graph& t, const AlgNum& lambda);

// Connected graphs with m_lambda = beta' + c - 1: hub w with exactly c(G)
// C3(a,a,a) parts of multiplicity 2 and trees of diameter <= 3 of
// multiplicity 1. Preconditions (connected, diameter >= 4, beta' >= 3,
// lambda != 0) are violations, thrown as std::invalid_argument.
Classification classify_thm32(const Graph& g, const AlgNum& lambda);

// Connected graphs with m_lambda = beta + c - 1: lambda^2 = t and a hub w
// with G - w a union of s+1 >= 3 copies of K_{1,t}, each extending to
// K_{1,t+1} through w. Preconditions (connected, beta' >= 3, lambda != 0)
// are thrown.
Classification classify_thm33(const Graph& g, const AlgNum& lambda);

}  // namespace sgt

#endif
