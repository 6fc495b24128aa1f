#include "sgt/spectral.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sgt {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix adjacency_matrix(const Graph& g) {
    int n = g.order();
    Matrix a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (auto [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    return a;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Int trace(const Matrix& m) {
    Int t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

// Rank of an integer matrix by one-step fraction-free elimination.
int int_matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        auto& pr = m[static_cast<size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<size_t>(r)];
            for (int j = col + 1; j < cols; ++j) {
                Int t = row[static_cast<size_t>(j)] * pr[static_cast<size_t>(col)] -
                        row[static_cast<size_t>(col)] * pr[static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                row[static_cast<size_t>(j)] = t;
            }
            row[static_cast<size_t>(col)] = 0;
        }
        prev = pr[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace

IntPoly char_poly(const Graph& g) {
    int n = g.order();
    if (n == 0) return IntPoly::constant(1);
    Matrix a = adjacency_matrix(g);
    std::vector<Int> c(static_cast<size_t>(n) + 1, 0);
    c[static_cast<size_t>(n)] = 1;  // leading coefficient of x^n
    Matrix m = a;
    Int ck = -trace(m);
    c[static_cast<size_t>(n - 1)] = ck;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
        m = mat_mul(a, m);
        ck = -trace(m);
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<size_t>(n - k)] = ck;
    }
    return IntPoly(std::move(c));
}

SquarefreeStrata spectral_strata(const Graph& g) { return squarefree_decompose(char_poly(g)); }

SpectrumSummary spectrum(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("spectrum: empty graph");
    SpectrumSummary out;
    for (auto& [q, i] : spectral_strata(g))
        for (auto& root : isolate_real_roots(q)) out.push_back({root, i});
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return alg_less(a.value, b.value); });
    return out;
}

int multiplicity(const Graph& g, const AlgNum& lambda) {
    for (auto& [q, i] : spectral_strata(g))
        if (is_root_of(lambda, q)) return i;
    return 0;
}

int multiplicity_rational(const Graph& g, const Rat& q) {
    int n = g.order();
    Matrix m = adjacency_matrix(g);
    Int num = q.get_num(), den = q.get_den();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] *= den;
            if (i == j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= num;
        }
    return n - int_matrix_rank(std::move(m));
}

bool is_eigenvalue(const Graph& g, const AlgNum& lambda) {
    return is_root_of(lambda, char_poly(g));
}

StarSet find_star_set(const Graph& g, const AlgNum& lambda) {
    int k = multiplicity(g, lambda);
    if (k < 1) throw std::invalid_argument("find_star_set: not an eigenvalue");
    int n = g.order();
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int v : idx) mask |= 1ull << v;
        Graph rest = delete_vertices(g, mask).graph;
        if (!is_root_of(lambda, char_poly(rest))) return {mask, lambda};
        // next k-combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    throw std::logic_error("find_star_set: no star set found (impossible)");
}

std::optional<std::vector<Edge>> pendant_induced_matching_witness(const Graph& t,
                                                                 const AlgNum& lambda) {
    if (!is_tree(t)) throw std::invalid_argument("pendant witness: not a tree");
    if (diameter(t) < 4) throw std::invalid_argument("pendant witness: diameter below 4");
    if (lambda.is_zero()) throw std::invalid_argument("pendant witness: lambda must be nonzero");
    int k = multiplicity(t, lambda);
    if (k < 1) throw std::invalid_argument("pendant witness: lambda not an eigenvalue");

    std::vector<Edge> pendant;
    for (auto [u, v] : t.edges())
        if (t.degree(u) == 1 || t.degree(v) == 1) pendant.emplace_back(u, v);
    int p = static_cast<int>(pendant.size()), want = k + 1;
    if (p < want) return std::nullopt;

    auto compatible = [&](const Edge& a, const Edge& b) {
        int av[2] = {a.first, a.second}, bv[2] = {b.first, b.second};
        for (int x : av)
            for (int y : bv)
                if (x == y || t.has_edge(x, y)) return false;
        return true;
    };
    std::vector<int> idx(static_cast<size_t>(want));
    std::vector<int> chosen;
    // lexicographically first subset via depth-first extension
    std::function<bool(int, int)> extend = [&](int start, int need) -> bool {
        if (need == 0) return true;
        for (int i = start; i <= p - need; ++i) {
            bool ok = true;
            for (int j : chosen)
                if (!compatible(pendant[static_cast<size_t>(j)], pendant[static_cast<size_t>(i)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (extend(i + 1, need - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(0, want)) return std::nullopt;
    std::vector<Edge> out;
    for (int i : chosen) out.push_back(pendant[static_cast<size_t>(i)]);
    return out;
}

std::vector<JointFactor> joint_root_multiplicities(const std::vector<IntPoly>& ps) {
    IntPoly f = IntPoly::constant(1);
    for (auto& p : ps) {
        if (p.is_zero()) throw std::invalid_argument("joint_root_multiplicities: zero polynomial");
        if (p.degree() >= 1) f = f * radical(p);
    }
    if (f.degree() >= 1) f = radical(f);
    std::vector<JointFactor> cur;
    if (f.degree() >= 1) cur.push_back({f, {}});
    for (auto& p : ps) {
        SquarefreeStrata strata =
            p.degree() >= 1 ? squarefree_decompose(p) : SquarefreeStrata{};
        std::vector<JointFactor> next;
        for (auto& [g, mv] : cur) {
            IntPoly rem = g;
            for (auto& [q, i] : strata) {
                if (rem.degree() < 1) break;
                IntPoly h = poly_gcd(rem, q);
                if (h.degree() >= 1) {
                    auto mv2 = mv;
                    mv2.push_back(i);
                    next.push_back({h, std::move(mv2)});
                    rem = rem.exact_div(h).primitive_part();
                }
            }
            if (rem.degree() >= 1) {
                auto mv2 = mv;
                mv2.push_back(0);
                next.push_back({rem, std::move(mv2)});
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool has_root_zero(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("has_root_zero: zero polynomial");
    return p.coeff(0) == 0;
}

bool has_nonzero_root(const IntPoly& squarefree_factor) {
    int d = squarefree_factor.degree();
    if (has_root_zero(squarefree_factor)) --d;
    return d >= 1;
}

}  // namespace sgt
