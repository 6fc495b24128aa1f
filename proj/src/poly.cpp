#include "sgt/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgt {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    IntPoly r = primitive_part_signed();
    if (!r.c_.empty() && r.c_.back() < 0)
        for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::primitive_part_signed() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    IntPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPoly::eval_scaled(const Int& num, const Int& den) const {
    // sum c_i num^i den^(deg-i), Horner style
    if (is_zero()) return Int(0);
    Int acc = c_.back();
    Int dpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + c_[static_cast<size_t>(i)] * dpow;
    }
    return acc;
}

int IntPoly::sign_at(const Rat& q) const {
    Rat r = q;
    r.canonicalize();
    Int v = eval_scaled(r.get_num(), r.get_den());
    return sgn(v);
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw std::invalid_argument("exact_div: not divisible");
    std::vector<Int> rem = c_;
    std::vector<Int> q(static_cast<size_t>(degree() - d.degree() + 1), Int(0));
    const Int& lc = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k + d.degree())];
        if (top == 0) continue;
        Int qk;
        Int r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        if (r != 0) throw std::invalid_argument("exact_div: not divisible");
        q[static_cast<size_t>(k)] = qk;
        for (int i = 0; i <= d.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= qk * d.coeff(i);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::invalid_argument("exact_div: nonzero remainder");
    return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = coeff(i);
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Int a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all-integer.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int delta = a.degree() - b.degree();
    const Int& lb = b.leading();
    std::vector<Int> r(a.coeffs());
    for (int k = delta; k >= 0; --k) {
        Int top = r[static_cast<size_t>(k + b.degree())];
        for (auto& v : r) v *= lb;
        for (int i = 0; i <= b.degree(); ++i)
            r[static_cast<size_t>(k + i)] -= top * b.coeff(i);
        // top coefficient is now exactly zero
    }
    r.resize(static_cast<size_t>(b.degree() >= 0 ? b.degree() : 0));
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
    if (a0.is_zero()) return b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    IntPoly a = a0.primitive_part();
    IntPoly b = b0.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // subresultant PRS
    Int g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return IntPoly::constant(1);
        a = b;
        Int div = g;
        for (int i = 0; i < delta; ++i) div *= h;
        {
            std::vector<Int> c = r.coeffs();
            for (auto& v : c) {
                Int q, rr;
                mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
                if (rr != 0) throw std::runtime_error("subresultant: inexact division");
                v = q;
            }
            b = IntPoly(std::move(c));
        }
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            Int hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gp / hp;
        }
    }
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

SquarefreeStrata squarefree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    SquarefreeStrata out;
    IntPoly w = p.primitive_part();
    if (w.degree() == 0) return out;
    // Musser's algorithm on the primitive part.
    IntPoly c = poly_gcd(w, w.derivative());
    w = w.exact_div(c);
    if (!w.coeffs().empty() && w.leading() < 0) w = -w;
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = poly_gcd(w, c);
        IntPoly z = w.exact_div(y);
        if (z.degree() > 0) out.emplace_back(z.primitive_part(), i);
        w = y;
        if (c.degree() > 0) c = c.exact_div(y);
        ++i;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.degree() < b.first.degree();
    });
    return out;
}

IntPoly radical(const IntPoly& p) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& [q, i] : squarefree_decompose(p)) r = r * q;
    return r.primitive_part();
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly a = p.primitive_part_signed();
    if (a.is_zero()) return;
    seq_.push_back(a);
    if (a.degree() == 0) return;
    IntPoly b = a.derivative().primitive_part_signed();
    seq_.push_back(b);
    while (seq_.back().degree() > 0) {
        const IntPoly& pa = seq_[seq_.size() - 2];
        const IntPoly& pb = seq_.back();
        // -rem(pa, pb), with a positive scale so the sign is preserved
        int delta = pa.degree() - pb.degree();
        IntPoly r = pseudo_rem(pa, pb);
        if (r.is_zero()) break;
        bool lb_neg = pb.leading() < 0;
        // pseudo_rem scales by lc(pb)^(delta+1); flip back when that is negative
        if (lb_neg && (delta + 1) % 2 == 1) r = -r;
        r = -r;
        seq_.push_back(r.primitive_part_signed());
    }
}

int SturmChain::variations_at(const Rat& t) const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

namespace {
int leading_sign_at_inf(const IntPoly& p, bool plus) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (!plus && p.degree() % 2 == 1) s = -s;
    return s;
}
}  // namespace

int SturmChain::variations_at_minus_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = leading_sign_at_inf(p, false);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_at_plus_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = leading_sign_at_inf(p, true);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (!(a < b)) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_roots() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

Rat cauchy_root_bound(const IntPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Int maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Int a = abs(p.coeff(i));
        if (a > maxc) maxc = a;
    }
    Int lead = abs(p.leading());
    // B0 = 1 + maxc/lead; round up to a power of two
    Int num = lead + maxc;  // ceil bound numerator over lead
    Rat b0(num, lead);
    b0.canonicalize();
    Rat b(1);
    while (b <= b0) b *= 2;
    return b;
}

std::string rat_to_string(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace sgt
