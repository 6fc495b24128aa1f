#ifndef SGT_SPECTRAL_HPP
#define SGT_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sgt/algnum.hpp"
#include "sgt/graph.hpp"
#include "sgt/poly.hpp"

namespace sgt {

// Characteristic polynomial det(xI - A(G)), monic, exact integer
// coefficients (Faddeev-LeVerrier).
IntPoly char_poly(const Graph& g);

// Squarefree strata of char_poly(g): lambda has multiplicity i iff it
// roots the stratum with index i.
SquarefreeStrata spectral_strata(const Graph& g);

struct SpectrumEntry {
    AlgNum value;
    int mult;
};
// Ascending eigenvalues with multiplicities; multiplicities sum to n.
using SpectrumSummary = std::vector<SpectrumEntry>;
SpectrumSummary spectrum(const Graph& g);

int multiplicity(const Graph& g, const AlgNum& lambda);
// Independent algorithm: n - rank(A - qI) by fraction-free elimination.
int multiplicity_rational(const Graph& g, const Rat& q);
bool is_eigenvalue(const Graph& g, const AlgNum& lambda);

struct StarSet {
    std::uint64_t vertices;
    AlgNum lambda;
};
// Lexicographically first X with |X| = m_lambda(g) and lambda not an
// eigenvalue of g - X. Requires m_lambda(g) >= 1.
StarSet find_star_set(const Graph& g, const AlgNum& lambda);

// For a tree with diameter >= 4 and m_lambda = k >= 1 (lambda != 0):
// the lexicographically first set of k+1 pendant edges forming an
// induced matching, or nullopt if none exists.
std::optional<std::vector<Edge>> pendant_induced_matching_witness(const Graph& t,
                                                                 const AlgNum& lambda);

// Distinct roots of a family of polynomials, partitioned into squarefree
// factors whose roots share one multiplicity per input polynomial.
// Lets multiplicity relations across several graphs be checked without
// isolating any root.
struct JointFactor {
    IntPoly factor;            // squarefree, primitive, positive leading coeff
    std::vector<int> mult;     // mult[k] = multiplicity of each root in ps[k]
};
std::vector<JointFactor> joint_root_multiplicities(const std::vector<IntPoly>& ps);

// True if the squarefree factor has a nonzero root (degree after removing
// a root at 0 is still positive), plus the root-at-0 test itself.
bool has_root_zero(const IntPoly& p);
bool has_nonzero_root(const IntPoly& squarefree_factor);

}  // namespace sgt

#endif
