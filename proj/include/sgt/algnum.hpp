#ifndef SGT_ALGNUM_HPP
#define SGT_ALGNUM_HPP

#include <string>
#include <vector>

#include "sgt/poly.hpp"

namespace sgt {

/// A real algebraic number: a squarefree primitive integer polynomial with
/// positive leading coefficient, plus a dyadic isolating interval [lo, hi]
/// that contains exactly one of its real roots. lo == hi marks an exact
/// rational value, in which case the polynomial is linear.
class AlgNum {
public:
    // Exact rational value.
    static AlgNum rational(const Rat& q);
    static AlgNum integer(long v) { return rational(Rat(v)); }
    // Root of p isolated by [lo, hi]; validates the isolation invariants.
    static AlgNum root_of(const IntPoly& p, const Rat& lo, const Rat& hi);
    // sqrt(t) / -sqrt(t) for a nonnegative integer t (rational when t is a
    // perfect square).
    static AlgNum sqrt_of(long t);
    static AlgNum minus_sqrt_of(long t);

    const IntPoly& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }

    bool is_rational() const { return lo_ == hi_; }
    Rat rational_value() const;  // throws unless is_rational()
    bool is_zero() const;
    int sign() const;

    // Shrink the isolating interval to width <= w (no-op on rationals).
    void refine_to(const Rat& w);
    double approx() const;

    std::string to_string() const;

private:
    AlgNum() = default;
    IntPoly poly_;
    Rat lo_, hi_;
    void bisect_once();
    friend bool alg_equal(const AlgNum&, const AlgNum&);
    friend bool alg_less(const AlgNum&, const AlgNum&);
};

bool alg_equal(const AlgNum& a, const AlgNum& b);
bool alg_less(const AlgNum& a, const AlgNum& b);

// True if x is a root of q (q need not be squarefree).
bool is_root_of(const AlgNum& x, const IntPoly& q);

// One AlgNum per distinct real root of a squarefree p, sorted ascending.
// Throws if p is not squarefree.
std::vector<AlgNum> isolate_real_roots(const IntPoly& p);

}  // namespace sgt

#endif
