#include "sgt/algnum.hpp"

#include <sstream>
#include <stdexcept>

namespace sgt {

AlgNum AlgNum::rational(const Rat& q) {
    Rat v = q;
    v.canonicalize();
    AlgNum a;
    a.poly_ = IntPoly(std::vector<Int>{-v.get_num(), v.get_den()});
    a.lo_ = v;
    a.hi_ = v;
    return a;
}

AlgNum AlgNum::root_of(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) throw std::invalid_argument("AlgNum: constant polynomial");
    IntPoly q = p.primitive_part();
    if (!is_squarefree(q)) throw std::invalid_argument("AlgNum: polynomial not squarefree");
    if (lo > hi) throw std::invalid_argument("AlgNum: empty interval");
    if (lo == hi) {
        if (q.sign_at(lo) != 0) throw std::invalid_argument("AlgNum: point is not a root");
        return rational(lo);
    }
    if (q.sign_at(lo) == 0) return rational(lo);
    if (q.sign_at(hi) == 0) return rational(hi);
    if (q.degree() == 1) return rational(Rat(-q.coeff(0), q.coeff(1)));
    SturmChain chain(q);
    if (chain.count_roots(lo, hi) != 1)
        throw std::invalid_argument("AlgNum: interval does not isolate one root");
    AlgNum a;
    a.poly_ = q;
    a.lo_ = lo;
    a.hi_ = hi;
    // collapse integer roots to exact rational form: shrink below width 1,
    // then test the single integer candidate left in the interval
    while (!a.is_rational() && a.hi_ - a.lo_ >= 1) a.bisect_once();
    if (a.is_rational()) return a;
    Rat k(Int(a.hi_.get_num() / a.hi_.get_den()));  // floor for positive hi
    if (a.hi_ < 0 && k != a.hi_) k -= 1;
    if (a.lo_ < k && k < a.hi_ && q.sign_at(k) == 0) return rational(k);
    return a;
}

AlgNum AlgNum::sqrt_of(long t) {
    if (t < 0) throw std::invalid_argument("sqrt_of: negative");
    Int tt(t);
    Int r = sqrt(tt);
    if (r * r == tt) return rational(Rat(r));
    return root_of(IntPoly(std::vector<Int>{-tt, 0, 1}), Rat(r), Rat(r + 1));
}

AlgNum AlgNum::minus_sqrt_of(long t) {
    if (t < 0) throw std::invalid_argument("minus_sqrt_of: negative");
    Int tt(t);
    Int r = sqrt(tt);
    if (r * r == tt) return rational(Rat(-r));
    return root_of(IntPoly(std::vector<Int>{-tt, 0, 1}), Rat(-(r + 1)), Rat(-r));
}

Rat AlgNum::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on irrational AlgNum");
    return lo_;
}

void AlgNum::bisect_once() {
    Rat mid = (lo_ + hi_) / 2;
    mid.canonicalize();
    if (poly_.sign_at(mid) == 0) {
        *this = rational(mid);
        return;
    }
    if (poly_.sign_at(lo_) * poly_.sign_at(mid) < 0)
        hi_ = mid;
    else
        lo_ = mid;
}

void AlgNum::refine_to(const Rat& w) {
    while (!is_rational() && hi_ - lo_ > w) bisect_once();
}

bool AlgNum::is_zero() const { return sign() == 0; }

int AlgNum::sign() const {
    if (is_rational()) return sgn(lo_);
    AlgNum t = *this;
    while (true) {
        if (t.is_rational()) return sgn(t.lo_);
        if (t.lo_ >= 0) return 1;
        if (t.hi_ <= 0) return -1;
        // 0 lies inside: the isolated root is 0 iff the polynomial vanishes there
        if (t.poly_.coeff(0) == 0) return 0;
        t.bisect_once();
    }
}

double AlgNum::approx() const {
    AlgNum t = *this;
    t.refine_to(Rat(1, 1 << 20));
    Rat mid = (t.lo_ + t.hi_) / 2;
    return mid.get_d();
}

std::string AlgNum::to_string() const {
    if (is_rational()) return rat_to_string(lo_);
    std::ostringstream os;
    os << "root of " << poly_.to_string() << " in [" << rat_to_string(lo_) << ", "
       << rat_to_string(hi_) << "] (~" << approx() << ")";
    return os.str();
}

bool alg_equal(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational()) return a.lo() == b.lo();
    if (a.is_rational() || b.is_rational()) {
        const AlgNum& r = a.is_rational() ? a : b;
        const AlgNum& x = a.is_rational() ? b : a;
        Rat v = r.lo();
        return x.poly().sign_at(v) == 0 && x.lo() < v && v < x.hi();
    }
    IntPoly g = poly_gcd(a.poly(), b.poly());
    if (g.degree() < 1) return false;
    SturmChain chain(g);
    if (chain.count_roots(a.lo(), a.hi()) != 1) return false;
    if (chain.count_roots(b.lo(), b.hi()) != 1) return false;
    Rat lo = std::max(a.lo(), b.lo());
    Rat hi = std::min(a.hi(), b.hi());
    if (!(lo < hi)) return false;
    return chain.count_roots(lo, hi) == 1;
}

bool alg_less(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational()) return a.lo() < b.lo();
    if (alg_equal(a, b)) return false;
    AlgNum x = a, y = b;
    while (true) {
        if (x.is_rational() && y.is_rational()) return x.lo() < y.lo();
        if (x.hi() <= y.lo()) return true;
        if (y.hi() <= x.lo()) return false;
        // overlap: shrink the wider interval; equality was excluded, so this ends
        if (!x.is_rational() && (y.is_rational() || x.hi() - x.lo() >= y.hi() - y.lo()))
            x.bisect_once();
        else
            y.bisect_once();
    }
}

bool is_root_of(const AlgNum& x, const IntPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("is_root_of: zero polynomial");
    if (q.degree() == 0) return false;
    if (x.is_rational()) return q.sign_at(x.rational_value()) == 0;
    IntPoly g = poly_gcd(x.poly(), q);
    if (g.degree() < 1) return false;
    return SturmChain(g).count_roots(x.lo(), x.hi()) == 1;
}

std::vector<AlgNum> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    IntPoly q = p.primitive_part();
    if (q.degree() < 1) return {};
    if (!is_squarefree(q)) throw std::invalid_argument("isolate_real_roots: not squarefree");
    SturmChain chain(q);
    Rat bound = cauchy_root_bound(q);
    std::vector<AlgNum> out;

    // depth-first left to right, so results come out sorted
    struct Frame {
        Rat lo, hi;
        int count;
    };
    auto emit = [&](const Rat& lo, const Rat& hi) { out.push_back(AlgNum::root_of(q, lo, hi)); };
    std::vector<Frame> stack;
    stack.push_back({-bound, bound, chain.count_roots(-bound, bound)});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.count == -1) {  // marker frame: exact rational root at f.lo
            out.push_back(AlgNum::rational(f.lo));
            continue;
        }
        if (f.count == 0) continue;
        if (f.count == 1) {
            emit(f.lo, f.hi);
            continue;
        }
        Rat mid = (f.lo + f.hi) / 2;
        mid.canonicalize();
        if (q.sign_at(mid) == 0) {
            // rational root exactly at the midpoint; carve out a gap around it
            Rat delta = (f.hi - f.lo) / 4;
            while (chain.count_roots(mid - delta, mid + delta) != 1 ||
                   q.sign_at(mid - delta) == 0 || q.sign_at(mid + delta) == 0)
                delta /= 2;
            int left = chain.count_roots(f.lo, mid - delta);
            int right = f.count - 1 - left;
            // push right first: stack pops left side before the root, root via ordering
            stack.push_back({mid + delta, f.hi, right});
            stack.push_back({mid, mid, -1});  // marker: emit rational(mid)
            stack.push_back({f.lo, mid - delta, left});
        } else {
            int cl = chain.count_roots(f.lo, mid);
            stack.push_back({mid, f.hi, f.count - cl});
            stack.push_back({f.lo, mid, cl});
        }
    }
    return out;
}

}  // namespace sgt
