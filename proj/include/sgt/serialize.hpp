#ifndef SGT_SERIALIZE_HPP
#define SGT_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "sgt/algnum.hpp"
#include "sgt/families.hpp"
#include "sgt/graph.hpp"
#include "sgt/matching.hpp"
#include "sgt/poly.hpp"
#include "sgt/spectral.hpp"

namespace sgt {

using Json = nlohmann::json;

// Polynomials as arrays of decimal strings, low degree first; rationals as
// "p/q" strings; algebraic numbers as {poly, lo, hi} (+ display approx).
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json algnum_to_json(const AlgNum& a);
AlgNum algnum_from_json(const Json& j);

Json spectrum_to_json(const SpectrumSummary& s);
Json edges_to_json(const std::vector<Edge>& edges);
Json matching_to_json(const MatchingResult& m);
Json classification_to_json(const Classification& c);

// Eigenvalue spec accepted by the CLI: "p/q" (exact rational) or
// "poly:c0,c1,...;interval:lo,hi" (coefficients low to high).
AlgNum parse_eigenvalue_spec(const std::string& spec);

}  // namespace sgt

#endif
