#ifndef SGT_POLY_HPP
#define SGT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sgt {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Coefficient i is the coefficient of x^i; trailing zeros
/// are trimmed, so degree() == coeffs().size() - 1 (and -1 for the zero
/// polynomial).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(Int c);
    static IntPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    // Coefficient of x^i (zero beyond the degree).
    const Int& coeff(int i) const;

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;

    IntPoly derivative() const;

    // gcd of all coefficients, nonnegative; 0 only for the zero polynomial.
    Int content() const;
    // p / content, with positive leading coefficient.
    IntPoly primitive_part() const;
    // p / content, keeping the sign of the leading coefficient.
    IntPoly primitive_part_signed() const;

    Int eval(const Int& x) const;
    // den^degree * p(num/den), exact.
    Int eval_scaled(const Int& num, const Int& den) const;
    // Exact sign of p(q): -1, 0 or +1.
    int sign_at(const Rat& q) const;

    // Exact quotient; throws if d does not divide *this exactly.
    IntPoly exact_div(const IntPoly& d) const;

    std::string to_string() const;  // human-readable, for messages

private:
    std::vector<Int> c_;
    void trim();
};

// Primitive gcd with positive leading coefficient, via the subresultant
// polynomial remainder sequence. gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Squarefree strata of p: pairs (q_i, i) with primitive-part(p) = +-prod
// q_i^i, the q_i squarefree, primitive, pairwise coprime, ordered by
// multiplicity. Throws on the zero polynomial.
using SquarefreeStrata = std::vector<std::pair<IntPoly, int>>;
SquarefreeStrata squarefree_decompose(const IntPoly& p);

// Product of the distinct irreducible factors (the radical), squarefree.
IntPoly radical(const IntPoly& p);

// True if gcd(p, p') is constant.
bool is_squarefree(const IntPoly& p);

/// Sturm chain of a polynomial; counts real roots in half-open intervals
/// (a, b] by sign-variation differences.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    int variations_at(const Rat& t) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
    // number of distinct real roots in (a, b]
    int count_roots(const Rat& a, const Rat& b) const;
    int count_all_roots() const;

private:
    std::vector<IntPoly> seq_;
};

// Smallest power of two B with every real root of p in (-B, B), B >= 1.
Rat cauchy_root_bound(const IntPoly& p);

// Rationals as "p/q" (or "p" when q == 1) for serialization.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace sgt

#endif
